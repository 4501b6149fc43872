// Copyright 2026 The inv3412 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Published reference data: the count tables for n <= 12, r <= 6 (all
// involutions, and even involutions) and the printed closed-form
// polynomials. The text is kept exactly as printed; where it is corrupted
// the diff tooling reports it rather than the fixture being corrected.

#include <array>
#include <cstdint>
#include <string_view>

namespace inv3412::golden {

inline constexpr int kTableMaxN = 12;
inline constexpr int kTableMaxR = 6;

using CountRows = std::array<std::array<std::int64_t, kTableMaxN + 1>, kTableMaxR + 1>;

// Involutions of length n with exactly r occurrences of 3412; [r][n].
inline constexpr CountRows kInvolutionCounts = {{    {{1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511}},
    {{0, 0, 0, 0, 1, 5, 20, 70, 231, 735, 2289, 7029, 21384}},
    {{0, 0, 0, 0, 0, 0, 1, 7, 37, 165, 671, 2563, 9375}},
    {{0, 0, 0, 0, 0, 0, 1, 4, 17, 63, 236, 877, 3270}},
    {{0, 0, 0, 0, 0, 0, 2, 12, 56, 220, 803, 2783, 9364}},
    {{0, 0, 0, 0, 0, 0, 0, 2, 14, 80, 383, 1658, 6690}},
    {{0, 0, 0, 0, 0, 0, 0, 2, 11, 51, 212, 856, 3402}}}};

// Even involutions (even number of inversions) of length n with exactly r
// occurrences of 3412; [r][n].
inline constexpr CountRows kEvenCounts = {{
    {{1, 1, 1, 2, 3, 11, 31, 71, 155, 379, 1051, 2971, 8053}},
    {{0, 0, 0, 0, 1, 5, 14, 30, 82, 320, 1213, 3895, 11141}},
    {{0, 0, 0, 0, 0, 0, 0, 0, 11, 95, 439, 1463, 4407}},
    {{0, 0, 0, 0, 0, 0, 1, 4, 11, 29, 104, 396, 1486}},
    {{0, 0, 0, 0, 0, 0, 0, 0, 14, 108, 321, 1612, 4782}},
    {{0, 0, 0, 0, 0, 0, 0, 0, 6, 60, 275, 878, 2247}},
    {{0, 0, 0, 0, 0, 0, 0, 0, 1, 21, 122, 446, 1504}}}};

// kind 'I': I_r = F/(2x^2) + G/(2x^2) sqrt(1-2x-3x^2)^(1-2r), F = f_num/f_den,
// G = g_num/g_den. kind 'N': the same shape with P, Q and sqrt(1-2x+5x^2).
struct PrintedFormula {
  char kind;
  int r;
  std::string_view f_den;
  std::string_view f_num;
  std::string_view g_den;
  std::string_view g_num;
};

inline constexpr std::array<PrintedFormula, 16> kPrintedFormulas = {{
    {'I', 0, "1", "1-x", "1", "-1"},
    {'I', 1, "1-x", "-(1-2x)", "1", "1-2x-2x^2"},
    {'I', 2, "1-x", "1-2x", "(1-x)^2", "-(1-6x+8x^2+8x^3-15x^4-2x^5+4x^6)"},
    {'I', 3, "(1-x^2)", "-(1-2x)(1+x+x^2)",
     "(1-x)^2",
     "1-8x+18x^2+x^2-29x^4-12x^5+14x^6+41x^7+2x^8-18x^9"},
    {'I', 4, "(1-x^2)", "-1+3x+4x^2-8x^3-2x^4",
     "(1-x)^4",
     "1-14x+71x^2-124x^3-166x^4+874x^5-624x^6-1332x^7+1909x^8+426x^9-1585x^10+292x^11+400x^12-126x^13"},
    {'I', 5, "(1-x^2)", "3-7x-7x^2+12x^3+6x^4",
     "(1-x)^4",
     "-3+46x-267x^2+627x^3+134x^4-3321x^5+3954x^6+5214x^7-11775x^8-2186x^9+14525x^10-1701x^11-8824x^12+1537x^13+2594x^14-216x^15-324x^16"},
    {'I', 6, "(1-x^2)^2", "-5+9x+21x^2-25x^3-34x^4+16x^5+24x^6-2x^7-2x^8",
     "(1-x)^6",
     "5-94x+712x^2-2582x^3+3124x^4+8364x^5-31620x^6+15464x^7+77508x^8-107098x^9-76814x^10+214160x^11+5782x^12-231050x^13+62700x^14+146176x^15-65653x^16-50328x^17+29646x^18+6462x^19-5346x^20+486x^21"},
    {'I', 7, "(1-x^2)^2", "7-11x-28x^2+20x^3+54x^4-2x^5-46x^6+2x^8",
     "(1-x)^6",
     "-7+144x-1210x^2+5020x^3-8206x^4-12180x^5+69464x^6-54210x^7-181468x^8+315366x^9+239852x^10-779338x^11-124766x^12+1226006x^13-168810x^14-1272344x^15+418555x^16+813368x^17-373802x^18-279554x^19+153648x^20+37188x^21-23166x^22+486x^23"},
    {'N', 0, "1", "x-1",
     "1",
     "1"},
    {'N', 1, "(x^2+1)", "(x+1)(2x^2-2x+1)",
     "(x^2+1)",
     "(x^2-1)(4x^2-2x+1)"},
    {'N', 2, "(x^2+1)^2", "(x-1)(2x^2-2x+1)(1+x)^2",
     "(x^2+1)^2",
     "(22x^6-58x^5+69x^4-48x^3+22x^2-6x+1)(1+x)^2"},
    {'N', 3, "(x^2+1)^3", "(2x^2-2x+1)(x^6+x^5+3x^4-2x^3-x^2+x+1)",
     "(x^2+1)^3",
     "(x-1)(100x^12-18x^11+323x^10-507x^9+491x^8-182x^7+52x^6-14x^5+46x^4-34x^3+19x^2-5x+1)"},
    {'N', 4, "(x^2+1)^4", "(1-x^2)(2x^8-2x^7+10x^6+x^5+15x^4-12x^3+12x^2-3x+1)",
     "(x^2+1)^4",
     "-(1+x)(650x^16-1880x^15+5992x^14-9143x^13+13671x^12-19666x^11+26606x^10-28683x^9+24771x^8-16778x^7+9158x^6-3969x^5+1385x^4-374x^3+78x^2-11x+1)"},
    {'N', 5, "(x^2+1)^5", "-4x^13-14x^11+5x^10-33x^9+29x^8-16x^7+34x^6-42x^5+14x^4+6x^3-15x^2+7x-3",
     "(x^2+1)^5",
     "(1-x)(5000x^21-4650x^20+24624x^19-25585x^18+76987x^17-95269x^16+127936x^15-140244x^14+169896x^13-159580x^12+119898x^11-51878x^10-84x^9+26302x^8-26778x^7+17822x^6-8604x^5+3270x^4-940x^3+209x^2-31x+3)"},
    {'N', 6, "(x^2+1)^6", "-6x^16+6x^15-44x^14+58x^13-128x^12+163x^11-195x^10+271x^9-221x^8+188x^7-170x^6+160x^5-82x^4+27x^3+9x^2-9x+5",
     "(x^2+1)^6",
     "-43750x^27+133750x^26-542500x^25+1329674x^24-2984612x^23+5378699x^22-8590394x^21+12236909x^20-15828644x^19+18229621x^18-19177696x^17+18659837x^16-17024788x^15+14266232x^14-10700428x^13+6908636x^12-3700402x^11+1527142x^10-395516x^9-27686x^8+101584x^7-68679x^6+30486x^5-10181x^4+2580x^3-493x^2+64x-5"},
    {'N', 7, "(x^2+1)^7", "-14x^18+12x^17-80x^16+94x^15-176x^14+212x^13-188x^12+247x^11-157x^10+35x^9-51x^8+28x^7+62x^6-142x^5+102x^4-49x^3-3x^2+11x-7",
     "(x^2+1)^7",
     "-481250x^31+1658750x^30-5844500x^29+14332172x^28-29824134x^27+52203592x^26-78380980x^25+104774831x^24-124983968x^23+132048678x^22-122776812x^21+101431782x^20-72478438x^19+39230434x^18-4374004x^17-25236483x^16+42491126x^15-44337242x^14+34831062x^13-21298364x^12+9941638x^11-3111220x^10+199166x^9+519349x^8-425180x^7+212566x^6-78950x^5+22882x^4-5138x^3+874x^2-102x+7"}}};

}  // namespace inv3412::golden
