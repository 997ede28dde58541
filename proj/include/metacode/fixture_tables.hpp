// Copyright 2026 The metacode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Published edge tables of the fixture graphs, in edge-table format.
// Vertex (block i, offset j) of G(m, l, ...) is numbered j*m + i + 1 in every
// table here (blocks interleaved). The G93 table additionally groups its rows
// by the index ranges 1-31, 32-62 and 63-93; those ranges are not the
// metacirculant blocks.

#ifndef METACODE_FIXTURE_TABLES_HPP
#define METACODE_FIXTURE_TABLES_HPP

namespace metacode::tables {

inline constexpr const char* kTableG28 = R"TABLE(n = 28
(1,{2, 4, 8, 11, 13, 14, 16, 17, 19, 20, 24 }),
(2,{7, 11, 12, 14, 15, 17, 18, 20, 23, 27 }),
(3,{4, 6, 10, 13, 15, 16, 18, 19, 21, 22, 26 }),
(4,{9, 13, 14, 16, 17, 19, 20, 22, 25 }),
(5,{6, 8, 12, 15, 17, 18, 20, 21, 23, 24, 28 }),
(6,{11, 15, 16, 18, 19, 21, 22, 24, 27 }),
(7,{8, 10, 14, 17, 19, 20, 22, 23, 25, 26 }),
(8,{13, 17, 18, 20, 21, 23, 24, 26 }),
(9,{10, 12, 16, 19, 21, 22, 24, 25, 27, 28 }),
(10,{15, 19, 20, 22, 23, 25, 26, 28 }),
(11,{12, 14, 18, 21, 23, 24, 26, 27 })
(12,{17, 21, 22, 24, 25, 27, 28 }),
(13,{14, 16, 20, 23, 25, 26, 28 }),
(14,{19, 23, 24, 26, 27 }),
(15,{16, 18, 22, 25, 27, 28 }),
(16,{21, 25, 26, 28 }),
(17,{18, 20, 24, 27 }),
(18,{23, 27, 28 }),(19,{20, 22, 26 }),
(20,{25 }),(21,{22, 24, 28 }),
(22,{27 }),(23,{24, 26 }),
(25,{26, 28 }),(27,{28 }).
)TABLE";

inline constexpr const char* kTableG36_1 = R"TABLE(n = 36
(1, { 3, 6, 7, 14, 18, 19, 24, 31, 32, 34, 35 }),
(2, { 4, 5, 7, 8, 15, 20, 21, 25, 32, 33, 36 }),
(3, { 5, 8, 9, 16, 20, 21, 26, 33, 34, 36 }),
(4, { 6, 7, 9, 10, 17, 22, 23, 27, 34, 35 }),
(5, { 7, 10, 11, 18, 22, 23, 28, 35, 36 }),
(6, { 8, 9, 11, 12, 19, 24, 25, 29, 36 }),
(7, { 9, 12, 13, 20, 24, 25, 30 }),
(8, { 10, 11, 13, 14, 21, 26, 27, 31 }),
(9, { 11, 14, 15, 22, 26, 27, 32 }),
(10, { 12, 13, 15, 16, 23, 28, 29, 33 }),
(11, { 13, 16, 17, 24, 28, 29, 34 }),
(12, { 14, 15, 17, 18, 25, 30, 31, 35 }),
(13, { 15, 18, 19, 26, 30, 31, 36 }),
(14, { 16, 17, 19, 20, 27, 32, 33 }),
(15, { 17, 20, 21, 28, 32, 33 }),
(16, { 18, 19, 21, 22, 29, 34, 35 }),
(17, { 19, 22, 23, 30, 34, 35 }),
(18, { 20, 21, 23, 24, 31, 36 }),
(19, { 21, 24, 25, 32, 36 }),
(20, { 22, 23, 25, 26, 33 }),
(21, { 23, 26, 27, 34 }),
(22, { 24, 25, 27, 28, 35 }),
(23, { 25, 28, 29, 36 }),
(24, { 26, 27, 29, 30 }),
(25, { 27, 30, 31 }),
(26, { 28, 29, 31, 32 }),
(27, { 29, 32, 33 }),
(28, { 30, 31, 33, 34 }),
(29, { 31, 34, 35 }),
(30, { 32, 33, 35, 36 }),
(31, { 33, 36 }),
(32, { 34, 35 }),
(33, { 35 }),(34, { 36 }).
)TABLE";

inline constexpr const char* kTableG36_2 = R"TABLE(n = 36
(1, { 2, 3, 4, 5, 6, 7, 8, 11, 12, 18, 20, 24, 26, 27, 28, 31, 32, 33, 35 }),
(2, { 4, 6, 7, 8, 11, 12, 13, 15, 19, 21, 27, 28, 31, 32, 33, 34, 35, 36 }),
(3, { 4, 5, 6, 7, 8, 9, 10, 13, 14, 20, 22, 26, 28, 29, 30, 33, 34, 35 }),
(4, { 6, 8, 9, 10, 13, 14, 15, 17, 21, 23, 29, 30, 33, 34, 35, 36 }),
(5, { 6, 7, 8, 9, 10, 11, 12, 15, 16, 22, 24, 28, 30, 31, 32, 35, 36 }),
(6, { 8, 10, 11, 12, 15, 16, 17, 19, 23, 25, 31, 32, 35, 36 }),
(7, { 8, 9, 10, 11, 12, 13, 14, 17, 18, 24, 26, 30, 32, 33, 34 }),
(8, { 10, 12, 13, 14, 17, 18, 19, 21, 25, 27, 33, 34 }),
(9, { 10, 11, 12, 13, 14, 15, 16, 19, 20, 26, 28, 32, 34, 35, 36 }),
(10, { 12, 14, 15, 16, 19, 20, 21, 23, 27, 29, 35, 36 }),
(11, { 12, 13, 14, 15, 16, 17, 18, 21, 22, 28, 30, 34, 36 }),
(12, { 14, 16, 17, 18, 21, 22, 23, 25, 29, 31 }),
(13, { 14, 15, 16, 17, 18, 19, 20, 23, 24, 30, 32, 36 }),
(14, { 16, 18, 19, 20, 23, 24, 25, 27, 31, 33 }),
(15, { 16, 17, 18, 19, 20, 21, 22, 25, 26, 32, 34 }),
(16, { 18, 20, 21, 22, 25, 26, 27, 29, 33, 35 }),
(17, { 18, 19, 20, 21, 22, 23, 24, 27, 28, 34, 36 }),
(18, { 20, 22, 23, 24, 27, 28, 29, 31, 35 }),
(19, { 20, 21, 22, 23, 24, 25, 26, 29, 30, 36 }),
(20, { 22, 24, 25, 26, 29, 30, 31, 33 }),
(21, { 22, 23, 24, 25, 26, 27, 28, 31, 32 }),
(22, { 24, 26, 27, 28, 31, 32, 33, 35 }),
(23, { 24, 25, 26, 27, 28, 29, 30, 33, 34 }),
(24, { 26, 28, 29, 30, 33, 34, 35 }),
(25, { 26, 27, 28, 29, 30, 31, 32, 35, 36 }),
(26, { 28, 30, 31, 32, 35, 36 }),
(27, { 28, 29, 30, 31, 32, 33, 34 }),
(28, { 30, 32, 33, 34 }),
(29, { 30, 31, 32, 33, 34, 35, 36 }),
(30, { 32, 34, 35, 36 }),(31, { 32, 33, 34, 35, 36 }),
(32, { 34, 36 }),
(33, { 34, 35, 36 }),(34, { 36 }),(35, { 36 }).
)TABLE";

inline constexpr const char* kTableG80_1 = R"TABLE(n = 80
(1, { 2, 3, 4, 5, 6, 7, 8, 9, 10, 13, 16, 18, 19, 21, 23, 24, 26, 27, 31, 33, 35, 37, 39, 40, 49, 50, 52, 53, 56, 58, 64, 66, 67, 69, 70, 71, 73, 75, 77, 79, 80 }),
(2, { 3, 4, 5, 6, 7, 8, 11, 12, 16, 17, 18, 19, 21, 22, 25, 26, 28, 30, 32, 33, 35, 36, 38, 40, 51, 52, 54, 55, 56, 57, 58, 59, 62, 65, 66, 68, 70, 72, 73, 75 }),
(3, { 4, 5, 6, 7, 8, 9, 10, 11, 13, 15, 17, 20, 21, 23, 24, 26, 28, 34, 35, 36, 38, 39, 49, 50, 51, 53, 55, 57, 60, 61, 65, 66, 68, 69, 71, 74, 75, 76, 79 }),
(4, { 5, 6, 7, 8, 11, 13, 18, 19, 20, 22, 24, 27, 28, 29, 32, 33, 34, 37, 38, 40, 50, 51, 53, 54, 56, 58, 59, 60, 62, 64, 67, 68, 69, 71, 72, 74, 77, 78 }),
(5, { 6, 7, 8, 9, 12, 13, 14, 17, 19, 20, 22, 23, 27, 30, 31, 33, 35, 36, 37, 39, 49, 52, 53, 54, 56, 60, 62, 65, 66, 67, 70, 71, 73, 75, 76, 77, 79 }),
(6, { 7, 8, 12, 15, 16, 17, 18, 21, 22, 23, 26, 28, 29, 30, 32, 34, 36, 37, 39,40, 50, 51, 52, 55, 56, 58, 61, 62, 63, 66, 68, 69, 70, 72, 77, 79 }),
(7, { 8, 9, 11, 13, 14, 15, 17, 19, 20, 21, 24, 30, 32, 34, 35, 38, 39, 40, 49,51, 53, 54, 55, 57, 61, 64, 65, 67, 69, 70, 72, 75, 78, 79, 80 }),
(8, { 9, 15, 18, 20, 22, 23, 24, 25, 28, 31, 32, 33, 34, 36, 37, 38, 49, 50, 52, 54, 55, 58, 60, 62, 63, 64, 65, 67, 68, 71, 72, 73, 74, 78 }),
(9, { 10, 11, 12, 13, 14, 15, 16, 17, 18, 21, 24, 26, 27, 29, 31, 32, 34, 35, 39, 41, 43, 45, 47, 48, 57, 58, 60, 61, 64, 66, 72, 74, 75, 77, 78, 79 }),
(10, { 11, 12, 13, 14, 15, 16, 19, 20, 24, 25, 26, 27, 29, 30, 33, 34, 36, 38, 40, 41, 43, 44, 46, 48, 59, 60, 62, 63, 64, 65, 66, 67, 70, 73, 74, 76, 78, 80 }),
(11, { 12, 13, 14, 15, 16, 17, 18, 19, 21, 23, 25, 28, 29, 31, 32, 34, 36, 42, 43, 44, 46, 47, 57, 58, 59, 61, 63, 65, 68, 69, 73, 74, 76, 77, 79 }),
(12, { 13, 14, 15, 16, 19, 21, 26, 27, 28, 30, 32, 35, 36, 37, 40, 41, 42, 45, 46, 48, 58, 59, 61, 62, 64, 66, 67, 68, 70, 72, 75, 76, 77, 79, 80 }),
(13, { 14, 15, 16, 17, 20, 21, 22, 25, 27, 28, 30, 31, 35, 38, 39, 41, 43, 44, 45, 47, 57, 60, 61, 62, 64, 68, 70, 73, 74, 75, 78, 79 }),
(14, { 15, 16, 20, 23, 24, 25, 26, 29, 30, 31, 34, 36, 37, 38, 40, 42, 44, 45, 47, 48, 58, 59, 60, 63, 64, 66, 69, 70, 71, 74, 76, 77, 78, 80 }),
(15, { 16, 17, 19, 21, 22, 23, 25, 27, 28, 29, 32, 38, 40, 42, 43, 46, 47, 48, 57, 59, 61, 62, 63, 65, 69, 72, 73, 75, 77, 78, 80 }),
(16, { 17, 23, 26, 28, 30, 31, 32, 33, 36, 39, 40, 41, 42, 44, 45, 46, 57, 58, 60, 62, 63, 66, 68, 70, 71, 72, 73, 75, 76, 79, 80 }),
(17, { 18, 19, 20, 21, 22, 23, 24, 25, 26, 29, 32, 34, 35, 37, 39, 40, 42, 43, 47, 49, 51, 53, 55, 56, 65, 66, 68, 69, 72, 74, 80 }),
(18, { 19, 20, 21, 22, 23, 24, 27, 28, 32, 33, 34, 35, 37, 38, 41, 42, 44, 46, 48, 49, 51, 52, 54, 56, 67, 68, 70, 71, 72, 73, 74, 75, 78 }),
(19, { 20, 21, 22, 23, 24, 25, 26, 27, 29, 31, 33, 36, 37, 39, 40, 42, 44, 50, 51, 52, 54, 55, 65, 66, 67, 69, 71, 73, 76, 77 }),
(20, { 21, 22, 23, 24, 27, 29, 34, 35, 36, 38, 40, 43, 44, 45, 48, 49, 50, 53, 54, 56, 66, 67, 69, 70, 72, 74, 75, 76, 78, 80 }),
(21, { 22, 23, 24, 25, 28, 29, 30, 33, 35, 36, 38, 39, 43, 46, 47, 49, 51, 52, 53, 55, 65, 68, 69, 70, 72, 76, 78 }),
(22, { 23, 24, 28, 31, 32, 33, 34, 37, 38, 39, 42, 44, 45, 46, 48, 50, 52, 53, 55, 56, 66, 67, 68, 71, 72, 74, 77, 78, 79 }),
(23, { 24, 25, 27, 29, 30, 31, 33, 35, 36, 37, 40, 46, 48, 50, 51, 54, 55, 56, 65, 67, 69, 70, 71, 73, 77, 80 }),
(24, { 25, 31, 34, 36, 38, 39, 40, 41, 44, 47, 48, 49, 50, 52, 53, 54, 65, 66, 68, 70, 71, 74, 76, 78, 79, 80 }),
(25, { 26, 27, 28, 29, 30, 31, 32, 33, 34, 37, 40, 42, 43, 45, 47, 48, 50, 51, 55, 57, 59, 61, 63, 64, 73, 74, 76, 77, 80 }),
(26, { 27, 28, 29, 30, 31, 32, 35, 36, 40, 41, 42, 43, 45, 46, 49, 50, 52, 54, 56, 57, 59, 60, 62, 64, 75, 76, 78, 79, 80 }),
(27, { 28, 29, 30, 31, 32, 33, 34, 35, 37, 39, 41, 44, 45, 47, 48, 50, 52, 58, 59, 60, 62, 63, 73, 74, 75, 77, 79 }),
(28, { 29, 30, 31, 32, 35, 37, 42, 43, 44, 46, 48, 51, 52, 53, 56, 57, 58, 61, 62, 64, 74, 75, 77, 78, 80 }),
(29, { 30, 31, 32, 33, 36, 37, 38, 41, 43, 44, 46, 47, 51, 54, 55, 57, 59, 60, 61, 63, 73, 76, 77, 78, 80 }),
(30, { 31, 32, 36, 39, 40, 41, 42, 45, 46, 47, 50, 52, 53, 54, 56, 58, 60, 61, 63, 64, 74, 75, 76, 79, 80 }),
(31, { 32, 33, 35, 37, 38, 39, 41, 43, 44, 45, 48, 54, 56, 58, 59, 62, 63, 64, 73, 75, 77, 78, 79 }),
(32, { 33, 39, 42, 44, 46, 47, 48, 49, 52, 55, 56, 57, 58, 60, 61, 62, 73, 74, 76, 78, 79 }),
(33, { 34, 35, 36, 37, 38, 39, 40, 41, 42, 45, 48, 50, 51, 53, 55, 56, 58, 59, 63, 65, 67, 69, 71, 72 }),
(34, { 35, 36, 37, 38, 39, 40, 43, 44, 48, 49, 50, 51, 53, 54, 57, 58, 60, 62, 64, 65, 67, 68, 70, 72 }),
(35, { 36, 37, 38, 39, 40, 41, 42, 43, 45, 47, 49, 52, 53, 55, 56, 58, 60, 66, 67, 68, 70, 71 }),
(36, { 37, 38, 39, 40, 43, 45, 50, 51, 52, 54, 56, 59, 60, 61, 64, 65, 66, 69, 70, 72 }),
(37, { 38, 39, 40, 41, 44, 45, 46, 49, 51, 52, 54, 55, 59, 62, 63, 65, 67, 68, 69, 71 }),
(38, { 39, 40, 44, 47, 48, 49, 50, 53, 54, 55, 58, 60, 61, 62, 64, 66, 68, 69, 71, 72 }),
(39, { 40, 41, 43, 45, 46, 47, 49, 51, 52, 53, 56, 62, 64, 66, 67, 70, 71, 72 }),
(40, { 41, 47, 50, 52, 54, 55, 56, 57, 60, 63, 64, 65, 66, 68, 69, 70 }),
(41, { 42, 43, 44, 45, 46, 47, 48, 49, 50, 53, 56, 58, 59, 61, 63, 64, 66, 67, 71, 73, 75, 77, 79, 80 }),
(42, { 43, 44, 45, 46, 47, 48, 51, 52, 56, 57, 58, 59, 61, 62, 65, 66, 68, 70, 72, 73, 75, 76, 78, 80 }),
(43, { 44, 45, 46, 47, 48, 49, 50, 51, 53, 55, 57, 60, 61, 63, 64, 66, 68, 74, 75, 76, 78, 79 }),
(44, { 45, 46, 47, 48, 51, 53, 58, 59, 60, 62, 64, 67, 68, 69, 72, 73, 74, 77, 78, 80 }),
(45, { 46, 47, 48, 49, 52, 53, 54, 57, 59, 60, 62, 63, 67, 70, 71, 73, 75, 76, 77, 79 }),
(46, { 47, 48, 52, 55, 56, 57, 58, 61, 62, 63, 66, 68, 69, 70, 72, 74, 76, 77, 79, 80 }),
(47, { 48, 49, 51, 53, 54, 55, 57, 59, 60, 61, 64, 70, 72, 74, 75, 78, 79, 80 }),
(48, {49,55,58,60,62, 63, 64, 65, 68, 71, 72, 73, 74, 76, 77, 78 }),
(49, { 50, 51, 52, 53, 54, 55, 56, 57, 58, 61, 64, 66, 67, 69, 71, 72, 74, 75, 79 }),
(50, { 51, 52, 53, 54, 55, 56, 59, 60, 64, 65, 66, 67, 69, 70, 73, 74, 76, 78, 80 }),
(51, { 52, 53, 54, 55, 56, 57, 58, 59, 61, 63, 65, 68, 69, 71, 72, 74, 76 }),
(52, { 53, 54, 55, 56, 59, 61, 66, 67, 68, 70, 72, 75, 76, 77, 80 }),
(53, { 54, 55, 56, 57, 60, 61, 62, 65, 67, 68, 70, 71, 75, 78, 79 }),
(54, { 55, 56, 60, 63, 64, 65, 66, 69, 70, 71, 74, 76, 77, 78, 80 })
(55, { 56, 57, 59, 61, 62, 63, 65, 67, 68, 69, 72, 78, 80 }),
(56, { 57, 63, 66, 68, 70, 71, 72, 73, 76, 79, 80 }),
(57, { 58, 59, 60, 61, 62, 63, 64, 65, 66, 69, 72, 74, 75, 77, 79, 80 }),
(58, { 59, 60, 61, 62, 63, 64, 67, 68, 72, 73, 74, 75, 77, 78 }),
(59, { 60, 61, 62, 63, 64, 65, 66, 67, 69, 71, 73, 76, 77, 79, 80 }),
(60, { 61, 62, 63, 64, 67, 69, 74, 75, 76, 78, 80 }),
(61, { 62, 63, 64, 65, 68, 69, 70, 73, 75, 76, 78, 79 }),
(62, { 63, 64, 68, 71, 72, 73, 74, 77, 78, 79 }),
(63, { 64, 65, 67, 69, 70, 71, 73, 75, 76, 77, 80 }),
(64, { 65, 71, 74, 76, 78, 79, 80 }),
(65, { 66, 67, 68, 69, 70, 71, 72, 73, 74, 77, 80 }),
(66, { 67, 68, 69, 70, 71, 72, 75, 76, 80 }),
(67, { 68, 69, 70, 71, 72, 73, 74, 75, 77, 79 }),
(68, { 69, 70, 71, 72, 75, 77 }),
(69, { 70, 71, 72, 73, 76, 77, 78 }),
(70, { 71, 72, 76, 79, 80 }),
(71, { 72, 73, 75, 77, 78, 79 }),
(72, { 73, 79 }),
(73, { 74, 75, 76, 77, 78, 79, 80 }),
(74, { 75, 76, 77, 78, 79, 80 }),
(75, { 76, 77, 78, 79, 80 }),
(76, { 77, 78, 79, 80 }),
(77, { 78, 79, 80 }),
(78, { 79, 80 }),(79, { 80 }).
)TABLE";

inline constexpr const char* kTableG93 = R"TABLE(n = 93
# (0,0) block, 48 edges
(1, { 14, 20, 23, 29, 31 }),
(2, { 15, 21, 24, 30, 31 }), (3, { 13, 19, 22, 28 }),
(4, { 17, 23, 26 }), (5, { 18, 24, 27 }), (6, { 16, 22, 25, 31 }),
(7, { 20, 26, 29 }),(8, { 21, 27, 30 }),
(9, { 19, 25, 28 }), (10, { 23, 29 }),
(11, { 24, 30 }), (12, { 22, 28, 31 }), (13, { 26 }),
(14, { 27 }),
(15, { 25, 31 }), (16, { 29 }),
(17, { 30 }), (18, { 28 }), (21, { 31 }).
# (1,1) block, 49 edges
(32, { 45, 51, 54, 60, 61, 62 }),
(33, { 43, 49, 52, 58, 62 }), (34, { 47, 53, 56, 62 }),
(35, { 48, 54, 57 }), (36, { 46, 52, 55, 61 }),
(37, { 50, 56, 59 }),(38, { 51, 57, 60 }),
(39, { 49, 55, 58 }),
(40, { 53, 59, 62 }), (41, { 54, 60 }),
(42, { 52, 58, 61 }), (43, { 56, 62 }),
(44, { 57 }),(45, { 55, 61 }), (46, { 59 }), (47, { 60 }),
(48, { 58 }), (49, { 62 }), (51, { 61 }).
# (2,2) block, 48 edges
(63, { 73, 79, 82, 88, 92, 93 }),
(64, { 77, 83, 86, 92 }), (65, { 78, 84, 87, 93 }),
(66, { 76, 82, 85, 91 }), (67, { 80, 86, 89 }),
(68, { 81, 87, 90 }),(69, { 79, 85, 88 }),
(70, { 83, 89, 92 }), (71, { 84, 90, 93 }),
(72, { 82, 88, 91 }), (73, { 86, 92 }), (74, { 87, 93 }),
(75, { 85, 91 }), (76, { 89 }),
(77, { 90 }), (78, { 88 }), (79, { 92 }),
(80, { 93 }), (81, { 91 }).
# (0,1) block, 385 edges
(1, { 33, 37, 38, 39, 40, 42, 44, 46, 47, 49, 51, 54, 55, 56, 58, 59, 60 }), (2, { 32, 37, 38, 39, 40, 41, 45, 47, 48, 49, 50, 52, 56, 57, 58, 59, 60 }),
(3, { 32, 33, 37, 38, 39, 41, 42, 43, 46, 48, 50, 51, 53, 55, 57, 58, 59, 60 }), (4, { 32, 34, 36, 40, 41, 42, 43, 45, 47, 49, 50, 52, 54, 57, 58, 59, 61, 62}),
(5, { 33, 34, 35, 40, 41, 42, 43, 44, 48, 50, 51, 52, 53, 55, 59, 60, 61, 62 }), (6, { 35, 36, 40, 41, 42, 44, 45, 46, 49, 51, 53, 54, 56, 58, 60, 61, 62 }),
(7, { 35, 37, 39, 43, 44, 45, 46, 48, 50, 52, 53, 55, 57, 60, 61, 62}), (8, { 36, 37, 38, 43, 44, 45, 46, 47, 51, 53, 54, 55, 56, 58, 62 }),
(9, { 34, 38, 39, 43, 44, 45, 47, 48, 49, 52, 54, 56, 57, 59, 61 }),
(10, { 32, 38, 40, 42, 46, 47, 48, 49, 51, 53, 55, 56, 58, 60 }),
(11, { 33, 39, 40, 41, 46, 47, 48, 49, 50, 54, 56, 57, 58, 59, 61 }),
(12, { 37, 41, 42, 46, 47, 48, 50, 51, 52, 55, 57, 59, 60, 62 }),
(13, { 32, 35, 41, 43, 45, 49, 50, 51, 52, 54, 56, 58, 59, 61 }),
(14, { 33, 36, 42, 43, 44, 49, 50, 51, 52, 53, 57, 59, 60, 61, 62 }),
(15, { 34, 40, 44, 45, 49, 50, 51, 53, 54, 55, 58, 60, 62 }),
(16, { 35, 38, 44, 46, 48, 52, 53, 54, 55, 57, 59, 61, 62 }),
(17, { 36, 39, 45, 46, 47, 52, 53, 54, 55, 56, 60, 62 }),
(18, { 34, 37, 43, 47, 48, 52, 53, 54, 56, 57, 58, 61 }),
(19, { 32, 38, 41, 47, 49, 51, 55, 56, 57, 58, 60, 62 }),
(20, { 33, 39, 42, 48, 49, 50, 55, 56, 57, 58, 59 }),
(21, { 37, 40, 46, 50, 51, 55, 56, 57, 59, 60, 61 }),
(22, { 35, 41, 44, 50, 52, 54, 58, 59, 60, 61 }),
(23, { 36, 42, 45, 51, 52, 53, 58, 59, 60, 61, 62 }),
(24, { 34, 40, 43, 49, 53, 54, 58, 59, 60, 62 }),
(25, { 38, 44, 47, 53, 55, 57, 61, 62 }),
(26, { 39, 45, 48, 54, 55, 56, 61, 62 }),
(27, { 37, 43, 46, 52, 56, 57, 61, 62 }),
(28, { 41, 47, 50, 56, 58, 60 }),
(29, { 42, 48, 51, 57, 58, 59 }),
(30, { 40, 46, 49, 55, 59, 60 }),
(31, { 44, 50, 53, 59, 61 }).
# (0,2) block, 387 edges
(1, { 64, 65, 69, 75, 78, 84 }), (2, { 65, 66, 67, 73, 76, 82 }),
(3, { 64, 66, 68, 74, 77, 83 }), (4, { 63, 67, 68, 72, 78, 81, 87 }),
(5, { 63, 68, 69, 70, 76, 79, 85 }),
(6, { 63, 67, 69, 71, 77, 80, 86 }),
(7, { 64, 65, 66, 70, 71, 75, 81, 84, 90 }),
(8, { 63, 64, 65, 66, 71, 72, 73, 79, 82, 88 }),
(9, { 63, 64, 65, 66, 70, 72, 74, 80, 83, 89 }),
(10, { 63, 64, 65, 67, 68, 69, 73, 74, 78, 84, 87, 93 }),
(11, { 65, 66, 67, 68, 69, 74, 75, 76, 82, 85, 91 }),
(12, { 64, 66, 67, 68, 69, 73, 75, 77, 83, 86, 92 }),
(13, { 63, 66, 67, 68, 70, 71, 72, 76, 77, 81, 87, 90 }),
(14, { 64, 68, 69, 70, 71, 72, 77, 78, 79, 85, 88 }),
(15, { 63, 65, 67, 69, 70, 71, 72, 76, 78, 80, 86, 89 }),
(16, { 64, 66, 69, 70, 71, 73, 74, 75, 79, 80, 84, 90, 93 }),
(17, { 63, 64, 65, 67, 71, 72, 73, 74, 75, 80, 81, 82, 88, 91 }),
(18, { 63, 65, 66, 68, 70, 72, 73, 74, 75, 79, 81, 83, 89, 92 }),
(19, { 64, 65, 67, 69, 72, 73, 74, 76, 77, 78, 82, 83, 87, 93 }),
(20, { 63, 65, 66, 67, 68, 70, 74, 75, 76, 77, 78, 83, 84, 85, 91 }),
(21, { 64, 66, 68, 69, 71, 73, 75, 76, 77, 78, 82, 84, 86, 92 }),
(22, { 63, 65, 67, 68, 70, 72, 75, 76, 77, 79, 80, 81, 85, 86, 90 }),
(23, { 66, 68, 69, 70, 71, 73, 77, 78, 79, 80, 81, 86, 87, 88 }),
(24, { 63, 64, 67, 69, 71, 72, 74, 76, 78, 79, 80, 81, 85, 87, 89 }),
(25, { 63, 64, 66, 68, 70, 71, 73, 75, 78, 79, 80, 82, 83, 84, 88, 89, 93 }),
(26, { 63, 64, 65, 69, 71, 72, 73, 74, 76, 80, 81, 82, 83, 84, 89, 90, 91 }),
(27, { 63, 65, 66, 67, 70, 72, 74, 75, 77, 79, 81, 82, 83, 84, 88, 90, 92 }),
(28, { 64, 65, 66, 67, 69, 71, 73, 74, 76, 78, 81, 82, 83, 85, 86, 87, 91, 92 }),
(29, { 64, 65, 66, 67, 68, 72, 74, 75, 76, 77, 79, 83, 84, 85, 86, 87, 92, 93 }),
(30, { 64, 65, 66, 68, 69, 70, 73, 75, 77, 78, 80, 82, 84, 85, 86, 87, 91, 93 }),
(31, { 63, 67, 68, 69, 70, 72, 74, 76, 77, 79, 81, 84, 85, 86, 88, 89, 90 }).
# (1,2) block, 385 edges
(32, { 67, 68, 69, 70, 71, 75, 77, 78, 79, 80, 82, 86, 87, 88, 89, 90 }),
(33, { 63, 67, 68, 69, 71, 72, 73, 76, 78, 80, 81, 83, 85, 87, 88, 89, 90 }),
(34, { 64, 66, 70, 71, 72, 73, 75, 77, 79, 80, 82, 84, 87, 88, 89, 91, 92, 93 }),
(35, { 63, 64, 65, 70, 71, 72, 73, 74, 78, 80, 81, 82, 83, 85, 89, 90, 91, 92, 93 }),
(36, { 65, 66, 70, 71, 72, 74, 75, 76, 79, 81, 83, 84, 86, 88, 90, 91, 92, 93 }),
(37, { 65, 67, 69, 73, 74, 75, 76, 78, 80, 82, 83, 85, 87, 90, 91, 92 }),
(38, { 66, 67, 68, 73, 74, 75, 76, 77, 81, 83, 84, 85, 86, 88, 92, 93 }), (39, { 64, 68, 69, 73, 74, 75, 77, 78, 79, 82, 84, 86, 87, 89, 91, 93 }),
(40, { 68, 70, 72, 76, 77, 78, 79, 81, 83, 85, 86, 88, 90, 93 }),
(41, { 63, 69, 70, 71, 76, 77, 78, 79, 80, 84, 86, 87, 88, 89, 91 }),
(42, { 67, 71, 72, 76, 77, 78, 80, 81, 82, 85, 87, 89, 90, 92 }),
(43, { 65, 71, 73, 75, 79, 80, 81, 82, 84, 86, 88, 89, 91, 93 }),
(44, { 63, 66, 72, 73, 74, 79, 80, 81, 82, 83, 87, 89, 90, 91, 92 }),
(45, { 64, 70, 74, 75, 79, 80, 81, 83, 84, 85, 88, 90, 92, 93 }),
(46, { 65, 68, 74, 76, 78, 82, 83, 84, 85, 87, 89, 91, 92 }),
(47, { 66, 69, 75, 76, 77, 82, 83, 84, 85, 86, 90, 92, 93 }),
(48, { 64, 67, 73, 77, 78, 82, 83, 84, 86, 87, 88, 91, 93 }),
(49, { 68, 71, 77, 79, 81, 85, 86, 87, 88, 90, 92 }),
(50, { 63, 69, 72, 78, 79, 80, 85, 86, 87, 88, 89, 93 }),
(51, { 67, 70, 76, 80, 81, 85, 86, 87, 89, 90, 91 }),
(52, { 65, 71, 74, 80, 82, 84, 88, 89, 90, 91, 93 }),
(53, { 66, 72, 75, 81, 82, 83, 88, 89, 90, 91, 92 }),
(54, { 64, 70, 73, 79, 83, 84, 88, 89, 90, 92, 93 }),
(55, { 68, 74, 77, 83, 85, 87, 91, 92, 93 }),
(56, { 69, 75, 78, 84, 85, 86, 91, 92, 93 }),
(57, { 67, 73, 76, 82, 86, 87, 91, 92, 93 }),
(58, { 71, 77, 80, 86, 88, 90 }),
(59, { 72, 78, 81, 87, 88, 89 }),
(60, { 70, 76, 79, 85, 89, 90 }),
(61, { 74, 80, 83, 89, 91, 93 }),
(62, { 75, 81, 84, 90, 91, 92 }).
)TABLE";

}  // namespace metacode::tables

#endif  // METACODE_FIXTURE_TABLES_HPP
