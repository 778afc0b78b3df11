#pragma once

#include <array>

// Gauss-Legendre nodes/weights on [-1, 1].
namespace ssr::detail {

struct GlPoint {
  double x;
  double w;
};

inline constexpr std::array<GlPoint, 4> kGl4{{
    {-0.8611363115940525752, 0.3478548451374538574},
    {-0.3399810435848562648, 0.6521451548625461426},
    {0.3399810435848562648, 0.6521451548625461426},
    {0.8611363115940525752, 0.3478548451374538574},
}};

inline constexpr std::array<GlPoint, 8> kGl8{{
    {-0.9602898564975362317, 0.1012285362903762592},
    {-0.7966664774136267396, 0.2223810344533744705},
    {-0.5255324099163289858, 0.3137066458778872873},
    {-0.1834346424956498049, 0.362683783378361983},
    {0.1834346424956498049, 0.362683783378361983},
    {0.5255324099163289858, 0.3137066458778872873},
    {0.7966664774136267396, 0.2223810344533744705},
    {0.9602898564975362317, 0.1012285362903762592},
}};

inline constexpr std::array<GlPoint, 12> kGl12{{
    {-0.9815606342467192507, 0.04717533638651182719},
    {-0.9041172563704748567, 0.106939325995318431},
    {-0.769902674194304687, 0.1600783285433462263},
    {-0.5873179542866174473, 0.2031674267230659217},
    {-0.3678314989981801938, 0.2334925365383548088},
    {-0.1252334085114689155, 0.249147045813402785},
    {0.1252334085114689155, 0.249147045813402785},
    {0.3678314989981801938, 0.2334925365383548088},
    {0.5873179542866174473, 0.2031674267230659217},
    {0.769902674194304687, 0.1600783285433462263},
    {0.9041172563704748567, 0.106939325995318431},
    {0.9815606342467192507, 0.04717533638651182719},
}};

}  // namespace ssr::detail
