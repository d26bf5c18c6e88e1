#include "cvol/twist_reference.hpp"

#include <stdexcept>

namespace cvol::reference {

IntPoly defining_polynomial(int n) {
  switch (n) {
    case 1: return IntPoly{16, -12, 3};
    case 2: return IntPoly{-64, 80, -40, 7};
    case 3: return IntPoly{256, -448, 336, -120, 17};
    case 4: return IntPoly{-2048, 4608, -4608, 2464, -696, 82};
    case 5: return IntPoly{4096, -11264, 14080, -9984, 4192, -980, 99};
    default: throw std::out_of_range("reference::defining_polynomial: n must be in 1..5");
  }
}

std::vector<VolumeRow> volume_rows(int n) {
  switch (n) {
    case 1: return {{{2.0, 1.1547}, 2.0299, 0.0}, {{2.0, -1.1547}, -2.0299, 0.0}};
    case 2:
      return {{{1.4587, 1.0682}, 2.8281, 3.0241},
              {{1.4587, -1.0682}, -2.8281, 3.0241},
              {{2.7969, 0.0}, 0.0, -1.1135}};
    case 3:
      return {{{1.2631, 1.0347}, 3.1640, 6.7907},
              {{1.2631, -1.0347}, -3.1640, 6.7907},
              {{2.2664, 0.7158}, 1.4151, 0.2110},
              {{2.2664, -0.7158}, -1.4151, 0.2110}};
    case 4:
      return {{{1.1713, 1.0202}, 3.3317, 10.9583},
              {{1.1713, -1.0202}, -3.3317, 10.9583},
              {{1.8097, 0.9073}, 2.2140, 1.8198},
              {{1.8097, -0.9073}, -2.2140, 1.8198},
              {{2.5257, 0.0}, 0.0, -0.8822}};
    case 5:
      return {{{1.1208, 1.0129}, 3.4272, 15.3545},
              {{1.1208, -1.0129}, -3.4272, 15.3545},
              {{1.5498, 0.9676}, 2.6560, 4.6428},
              {{1.5498, -0.9676}, -2.6560, 4.6428},
              {{2.2789, 0.4876}, 1.1087, -0.2581},
              {{2.2789, -0.4876}, -1.1087, -0.2581}};
    default: throw std::out_of_range("reference::volume_rows: n must be in 1..5");
  }
}

RationalFunction side_x(int k) {
  switch (k) {
    case 0: return {IntPoly{0, 1}};
    case 1: return {IntPoly{0, 2, 1}, IntPoly{8, -4, 1}};
    case 2: return {IntPoly{0, -4}, IntPoly{-16, 16, -7, 1}};
    case 3: return {IntPoly{0, 32, -16, 2, 1}, IntPoly{128, -192, 128, -40, 5}};
    case 4: return {IntPoly{0, -64, 64, -24, 0, 1}, IntPoly{-256, 512, -464, 224, -57, 6}};
    case 5: return {IntPoly{0, 512, -768, 480, -112, -6, 5}, IntPoly{2048, -5120, 5888, -3840, 1480, -316, 29}};
    default: throw std::out_of_range("reference::side_x: k must be in 0..5");
  }
}

RationalFunction side_y(int k) {
  switch (k) {
    case 0: return {IntPoly{2, 1}, IntPoly{0, 1}};
    case 1: return {IntPoly{4}, IntPoly{0, 1}};
    case 2: return {IntPoly{32, -16, 2, 1}, IntPoly{0, 8, -4, 1}};
    case 3: return {IntPoly{-64, 64, -24, 0, 1}, IntPoly{0, -16, 16, -7, 1}};
    case 4: return {IntPoly{512, -768, 480, -112, -6, 5}, IntPoly{0, 128, -192, 128, -40, 5}};
    case 5:
      return {IntPoly{-1024, 2048, -1792, 768, -124, -16, 6}, IntPoly{0, -256, 512, -464, 224, -57, 6}};
    default: throw std::out_of_range("reference::side_y: k must be in 0..5");
  }
}

}  // namespace cvol::reference
