#include "sfd/tables.hpp"

// Reference half-tables of spin fake degrees (coefficients for degrees
// 0..N/2; the upper half follows by palindromicity). Used to pin column
// order and labels, and by the verification suites.

namespace sfd {

namespace {

const GoldenTable kTables[] = {
    {CartanType{'G', 2}, 6,
     {"2_s", "2_ss", "2_sss"},
     {
         {1, 1, 0, 0},
         {0, 0, 1, 2},
         {0, 1, 1, 0},
     }},
    {CartanType{'F', 4}, 24,
     {"4_s", "4_ss", "8_sss", "8_ssss", "12_ss", "12_s", "8_s", "24_s", "8_ss"},
     {
         {1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 2},
         {0, 0, 0, 0, 0, 0, 1, 2, 1, 0, 0, 2, 4},
         {0, 0, 0, 1, 2, 1, 0, 1, 3, 3, 2, 2, 2},
         {0, 0, 0, 1, 2, 1, 0, 1, 3, 3, 2, 2, 2},
         {0, 0, 0, 0, 0, 1, 3, 4, 3, 2, 4, 5, 4},
         {0, 1, 1, 0, 1, 2, 3, 3, 2, 2, 3, 4, 4},
         {0, 0, 0, 0, 0, 1, 2, 2, 3, 2, 0, 3, 6},
         {0, 0, 1, 2, 2, 3, 4, 4, 5, 8, 9, 7, 6},
         {0, 0, 0, 0, 1, 1, 0, 2, 3, 2, 2, 3, 4},
     }},
    {CartanType{'E', 6}, 36,
     {"8_s", "40_s", "72_s", "40_ss", "120_s", "120_ss^Q", "160_s^Q", "40_sss^Q", "128_s^Q"},
     {
         {1, 1, 0, 0, 1, 2, 1, 1, 2, 2, 1, 2, 4, 3, 1, 2, 4, 3, 2},
         {0, 1, 1, 1, 3, 4, 4, 5, 8, 9, 9, 11, 14, 15, 14, 16, 19, 18, 16},
         {0, 0, 0, 0, 1, 3, 4, 5, 9, 13, 14, 19, 27, 29, 30, 35, 39, 40, 40},
         {0, 0, 0, 0, 0, 0, 0, 1, 3, 6, 8, 8, 13, 19, 18, 20, 28, 26, 20},
         {0, 0, 0, 1, 2, 3, 7, 11, 13, 18, 27, 34, 39, 47, 55, 59, 62, 67, 70},
         {0, 0, 2, 4, 4, 6, 10, 14, 18, 24, 30, 34, 38, 44, 52, 56, 56, 58, 60},
         {0, 0, 0, 0, 2, 4, 6, 12, 18, 24, 34, 44, 52, 64, 74, 80, 88, 92, 92},
         {0, 0, 0, 0, 0, 0, 0, 0, 4, 8, 6, 8, 14, 16, 18, 24, 26, 24, 24},
         {0, 0, 0, 0, 0, 2, 4, 6, 12, 18, 24, 34, 44, 50, 60, 70, 72, 76, 80},
     }},
    {CartanType{'E', 7}, 63,
     {"16_s^Q", "96_s^Q", "336_s^Q", "560_s^Q", "224_s^Q", "224_ss^Q", "1024_s^Q", "1440_s^Q", "1120_s^Q", "896_s^Q", "240_s^Q", "128_s^Q", "128_ss^Q"},
     {
         {2, 2, 0, 0, 0, 2, 2, 2, 2, 2, 2, 2, 4, 4, 4, 2, 4, 6, 6, 4, 4, 6, 6, 6, 6, 8, 6, 6, 6, 8, 8, 6},
         {0, 2, 2, 0, 2, 4, 6, 6, 6, 8, 10, 12, 14, 18, 18, 18, 22, 28, 30, 30, 32, 36, 40, 40, 42, 46, 48, 46, 48, 52, 52, 50},
         {0, 0, 2, 4, 4, 6, 8, 10, 14, 20, 26, 30, 36, 44, 54, 64, 72, 82, 94, 104, 116, 130, 140, 148, 158, 170, 180, 186, 190, 196, 200, 200},
         {0, 0, 0, 2, 4, 4, 6, 10, 16, 22, 28, 36, 46, 58, 72, 90, 108, 124, 142, 166, 190, 212, 234, 256, 278, 298, 316, 332, 346, 354, 362, 368},
         {0, 0, 0, 0, 0, 2, 4, 4, 6, 8, 10, 14, 20, 26, 30, 34, 40, 52, 62, 66, 74, 86, 94, 102, 112, 120, 126, 130, 136, 144, 148, 142},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 4, 4, 8, 14, 18, 22, 30, 40, 48, 58, 68, 82, 96, 104, 116, 132, 142, 146, 156, 166, 168, 168},
         {0, 0, 0, 0, 2, 4, 6, 12, 18, 26, 38, 52, 68, 90, 116, 142, 176, 212, 250, 294, 338, 382, 430, 476, 518, 562, 600, 632, 662, 684, 696, 706},
         {0, 0, 0, 0, 0, 2, 6, 10, 16, 24, 36, 56, 80, 104, 136, 178, 222, 274, 334, 396, 462, 530, 600, 676, 748, 806, 866, 926, 968, 1000, 1026, 1038},
         {0, 0, 0, 0, 0, 0, 0, 0, 4, 12, 18, 26, 40, 60, 86, 116, 150, 192, 240, 288, 346, 410, 468, 526, 588, 648, 702, 748, 784, 818, 842, 848},
         {0, 0, 0, 0, 0, 0, 0, 2, 4, 6, 14, 22, 32, 50, 68, 90, 122, 154, 188, 234, 278, 322, 376, 424, 468, 520, 562, 594, 632, 656, 668, 682},
         {0, 0, 0, 0, 0, 0, 2, 4, 2, 2, 6, 10, 14, 18, 22, 28, 36, 44, 56, 68, 76, 86, 100, 114, 124, 134, 144, 154, 164, 168, 170, 174},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 4, 4, 8, 12, 14, 20, 26, 30, 38, 48, 52, 60, 70, 74, 82, 90, 92, 96, 102, 100},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 4, 4, 8, 12, 14, 20, 26, 30, 38, 48, 52, 60, 70, 74, 82, 90, 92, 96, 102, 100},
     }},
    {CartanType{'E', 8}, 120,
     {"16_s", "112_s", "320_s", "448_s", "224_s", "448_ss", "1680_s", "2592_s", "1344_s", "5600_s", "4800_s", "2016_s", "5600_ss", "9072_s", "800_s", "2800_ss", "5600_sss", "7168_s", "1120_s", "8400_s", "11200_s", "6720_s", "2800_s", "1344_ss", "6480_s", "8192_s", "2016_ss", "2016_sss", "7168_ss", "896_s"},
     {
         {1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 1, 2, 2, 2, 1, 0, 1, 3, 2, 1, 1, 1, 2, 4, 4, 2, 1, 1, 2, 4, 5, 2, 1, 3, 4, 4, 5, 3, 0, 1, 5, 6, 5, 4, 2, 2, 5, 6, 4, 3, 2, 2, 5, 8},
         {0, 1, 1, 0, 0, 0, 1, 2, 2, 1, 1, 2, 3, 4, 4, 2, 1, 4, 7, 8, 7, 5, 4, 7, 11, 12, 10, 8, 8, 12, 18, 19, 14, 11, 13, 17, 23, 25, 20, 15, 18, 25, 30, 30, 24, 18, 22, 31, 35, 34, 29, 23, 25, 35, 40, 35, 28, 25, 28, 37, 42},
         {0, 0, 0, 0, 0, 0, 0, 1, 2, 1, 0, 1, 3, 4, 4, 3, 2, 4, 8, 11, 12, 9, 6, 11, 20, 23, 20, 18, 18, 24, 36, 42, 38, 31, 31, 43, 59, 64, 55, 48, 54, 68, 82, 87, 78, 65, 69, 92, 110, 107, 92, 82, 90, 111, 124, 118, 102, 91, 97, 121, 136},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1, 0, 1, 4, 6, 6, 6, 5, 6, 12, 18, 19, 16, 15, 21, 34, 43, 39, 35, 39, 48, 64, 78, 75, 65, 70, 90, 111, 120, 110, 99, 111, 135, 154, 161, 150, 135, 143, 173, 193, 186, 165, 155, 169, 193, 204},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1, 0, 1, 4, 5, 4, 5, 6, 7, 10, 16, 19, 14, 12, 20, 29, 34, 34, 31, 35, 43, 50, 58, 61, 52, 48, 69, 87, 83, 78, 74, 75, 92, 104, 99, 93, 87, 84, 104, 122},
         {0, 0, 1, 1, 0, 1, 2, 2, 2, 3, 3, 3, 5, 7, 8, 8, 8, 10, 14, 16, 16, 17, 20, 23, 27, 32, 34, 33, 35, 42, 49, 52, 53, 55, 60, 68, 74, 78, 81, 81, 83, 94, 105, 106, 104, 108, 114, 120, 127, 130, 128, 127, 131, 140, 148, 147, 140, 139, 145, 149, 150},
         {0, 0, 0, 0, 0, 0, 1, 2, 2, 2, 2, 3, 6, 10, 11, 11, 13, 16, 23, 32, 35, 35, 40, 50, 65, 80, 86, 86, 95, 115, 139, 161, 170, 171, 185, 217, 253, 277, 283, 285, 305, 346, 389, 413, 413, 413, 437, 482, 525, 540, 527, 522, 549, 592, 624, 627, 603, 587, 609, 645, 660},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 5, 5, 4, 8, 14, 19, 24, 26, 30, 41, 55, 71, 85, 90, 98, 125, 159, 183, 203, 220, 241, 284, 335, 373, 401, 421, 448, 511, 584, 622, 641, 667, 706, 770, 838, 873, 881, 891, 925, 989, 1047, 1053, 1030, 1028, 1055, 1095, 1116},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 5, 6, 7, 7, 9, 18, 26, 28, 32, 39, 46, 63, 84, 90, 93, 107, 126, 157, 187, 193, 200, 227, 257, 291, 328, 337, 336, 367, 410, 448, 476, 473, 471, 504, 542, 566, 580, 569, 553, 575, 608, 618},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 6, 6, 7, 11, 21, 32, 38, 45, 56, 71, 98, 132, 155, 171, 197, 243, 308, 369, 407, 445, 506, 584, 682, 782, 843, 889, 973, 1094, 1229, 1336, 1387, 1442, 1551, 1681, 1807, 1906, 1940, 1962, 2052, 2179, 2278, 2316, 2290, 2280, 2347, 2420, 2442},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 3, 3, 8, 14, 17, 22, 32, 44, 56, 69, 89, 116, 137, 159, 200, 244, 277, 319, 377, 436, 493, 552, 622, 705, 776, 842, 936, 1031, 1100, 1180, 1281, 1370, 1447, 1523, 1603, 1692, 1760, 1807, 1878, 1947, 1974, 2004, 2054, 2078, 2079, 2080},
         {0, 0, 0, 0, 1, 1, 0, 1, 2, 3, 5, 7, 7, 7, 10, 15, 21, 25, 25, 28, 38, 49, 59, 67, 71, 76, 92, 117, 138, 146, 150, 165, 194, 228, 253, 265, 274, 294, 332, 379, 411, 417, 419, 449, 501, 545, 567, 571, 574, 600, 649, 693, 706, 690, 680, 706, 753, 779, 767, 741, 730},
         {0, 0, 0, 0, 0, 1, 2, 2, 3, 5, 8, 11, 13, 17, 24, 31, 39, 50, 61, 71, 86, 109, 133, 154, 175, 203, 241, 281, 320, 364, 408, 452, 510, 580, 646, 702, 758, 829, 915, 999, 1073, 1145, 1218, 1292, 1380, 1477, 1556, 1613, 1670, 1745, 1832, 1903, 1948, 1987, 2027, 2066, 2112, 2155, 2169, 2156, 2146},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 6, 8, 10, 18, 29, 35, 42, 57, 75, 97, 126, 156, 186, 222, 267, 328, 398, 456, 512, 593, 694, 799, 906, 1013, 1118, 1231, 1369, 1531, 1684, 1804, 1924, 2080, 2257, 2426, 2571, 2692, 2814, 2951, 3098, 3251, 3372, 3428, 3482, 3589, 3694, 3753, 3775, 3766, 3754},
         {0, 0, 0, 0, 0, 0, 0, 1, 2, 1, 0, 1, 3, 4, 4, 4, 5, 6, 8, 13, 16, 14, 13, 20, 30, 34, 34, 36, 41, 49, 60, 72, 78, 75, 78, 98, 120, 128, 127, 131, 145, 163, 182, 197, 200, 196, 204, 233, 261, 263, 252, 254, 271, 291, 304, 308, 301, 289, 294, 319, 334},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1, 1, 4, 7, 8, 9, 12, 18, 25, 31, 40, 50, 56, 67, 91, 115, 128, 141, 166, 200, 235, 266, 298, 333, 364, 405, 467, 522, 550, 579, 634, 700, 756, 799, 837, 876, 917, 967, 1028, 1071, 1076, 1083, 1126, 1174, 1194, 1192, 1186, 1184},
         {0, 0, 0, 0, 0, 0, 1, 2, 2, 3, 4, 5, 9, 15, 19, 21, 24, 33, 49, 64, 74, 84, 99, 121, 154, 192, 219, 237, 266, 318, 386, 445, 483, 521, 579, 659, 754, 841, 897, 939, 1011, 1128, 1253, 1339, 1383, 1431, 1521, 1641, 1755, 1831, 1858, 1878, 1949, 2064, 2157, 2177, 2149, 2146, 2198, 2265, 2294},
         {0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 5, 7, 8, 9, 14, 23, 32, 41, 49, 57, 75, 103, 129, 151, 173, 198, 240, 302, 360, 403, 446, 501, 579, 681, 775, 840, 902, 991, 1113, 1252, 1371, 1448, 1516, 1625, 1776, 1929, 2042, 2106, 2163, 2269, 2421, 2554, 2621, 2639, 2661, 2734, 2849, 2929, 2925, 2877, 2852},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 7, 6, 3, 8, 18, 21, 22, 27, 32, 39, 52, 68, 80, 79, 80, 106, 138, 153, 159, 169, 187, 214, 244, 270, 286, 284, 291, 341, 390, 393, 388, 397, 415, 450, 479, 481, 475, 466, 465, 504, 536},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 3, 5, 10, 18, 24, 28, 36, 51, 72, 98, 122, 142, 169, 212, 271, 335, 388, 434, 499, 594, 703, 810, 902, 984, 1090, 1236, 1401, 1548, 1658, 1758, 1898, 2085, 2270, 2413, 2515, 2610, 2744, 2921, 3087, 3187, 3228, 3272, 3369, 3499, 3586, 3592, 3553, 3530},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 4, 5, 9, 15, 20, 27, 39, 53, 68, 87, 114, 147, 180, 217, 269, 331, 390, 457, 544, 638, 732, 838, 962, 1095, 1228, 1367, 1528, 1702, 1863, 2027, 2219, 2413, 2589, 2771, 2968, 3159, 3335, 3505, 3681, 3855, 3998, 4123, 4264, 4392, 4475, 4546, 4624, 4677, 4696, 4700},
         {0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 3, 5, 8, 12, 16, 20, 26, 35, 47, 62, 77, 91, 109, 135, 168, 203, 235, 271, 316, 368, 430, 497, 557, 616, 690, 778, 874, 970, 1052, 1135, 1239, 1351, 1464, 1576, 1669, 1752, 1858, 1980, 2092, 2185, 2255, 2320, 2406, 2497, 2569, 2619, 2644, 2661, 2696, 2738, 2756},
         {0, 0, 0, 0, 0, 0, 0, 1, 2, 1, 0, 2, 6, 8, 9, 10, 11, 15, 23, 34, 42, 41, 41, 58, 84, 101, 109, 116, 129, 156, 195, 232, 252, 255, 270, 326, 397, 435, 445, 459, 496, 562, 637, 687, 700, 698, 731, 822, 912, 934, 913, 915, 963, 1038, 1097, 1105, 1072, 1045, 1070, 1144, 1188},
         {0, 0, 0, 1, 2, 2, 2, 2, 3, 5, 7, 8, 9, 10, 12, 18, 24, 25, 25, 29, 36, 45, 54, 59, 61, 67, 79, 95, 109, 114, 115, 126, 148, 169, 183, 191, 196, 207, 232, 261, 277, 279, 282, 299, 330, 358, 368, 366, 369, 384, 410, 437, 445, 432, 426, 444, 470, 483, 477, 460, 450},
         {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 2, 5, 7, 9, 13, 18, 23, 31, 45, 60, 68, 79, 106, 140, 168, 196, 229, 268, 317, 375, 442, 508, 557, 614, 713, 824, 907, 981, 1069, 1168, 1283, 1407, 1521, 1617, 1695, 1786, 1926, 2068, 2147, 2197, 2274, 2369, 2464, 2547, 2599, 2620, 2626, 2654, 2718, 2756},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 6, 9, 13, 20, 28, 37, 51, 68, 86, 111, 140, 171, 212, 258, 306, 366, 432, 501, 583, 672, 762, 866, 978, 1088, 1212, 1343, 1469, 1608, 1752, 1887, 2032, 2179, 2314, 2455, 2596, 2719, 2844, 2967, 3067, 3166, 3260, 3327, 3391, 3448, 3476, 3498, 3512},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 6, 10, 10, 10, 17, 26, 35, 43, 49, 58, 74, 94, 116, 136, 145, 159, 196, 236, 265, 291, 311, 338, 389, 438, 473, 507, 524, 547, 614, 674, 693, 710, 731, 753, 806, 853, 853, 852, 858, 860, 898, 932},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 6, 9, 10, 12, 17, 26, 35, 40, 49, 63, 74, 91, 116, 131, 145, 169, 196, 230, 265, 286, 311, 353, 389, 425, 473, 504, 524, 566, 614, 655, 693, 713, 731, 772, 806, 827, 853, 861, 858, 876, 898, 904},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 6, 9, 13, 20, 28, 37, 51, 68, 86, 111, 140, 170, 210, 256, 302, 360, 425, 490, 568, 655, 739, 835, 943, 1045, 1158, 1283, 1397, 1520, 1656, 1777, 1902, 2038, 2156, 2273, 2402, 2508, 2605, 2714, 2798, 2868, 2949, 3002, 3036, 3081, 3100, 3096},
         {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 2, 4, 4, 5, 9, 12, 14, 18, 22, 29, 35, 38, 48, 61, 66, 73, 90, 104, 112, 126, 142, 158, 175, 186, 203, 227, 240, 249, 273, 294, 300, 314, 334, 346, 356, 364, 372, 386, 392, 387, 394, 404},
     }},
    {CartanType{'B', 2}, 4,
     {"(2)", "(1,1)"},
     {
         {1, 1, 0},
         {0, 1, 2},
     }},
    {CartanType{'A', 4}, 10,
     {"(5)^Q", "(4,1)", "(3,2)"},
     {
         {1, 1, 1, 2, 2, 2},
         {0, 2, 4, 6, 8, 8},
         {0, 0, 2, 4, 6, 8},
     }},
    {CartanType{'B', 4}, 16,
     {"(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"},
     {
         {1, 1, 0, 1, 1, 1, 1, 1, 2},
         {0, 1, 2, 2, 3, 4, 5, 5, 4},
         {0, 0, 0, 1, 3, 3, 2, 4, 6},
         {0, 0, 1, 2, 2, 4, 6, 6, 6},
         {0, 0, 0, 1, 2, 1, 1, 2, 2},
     }},
    {CartanType{'D', 4}, 12,
     {"{(1,1,1,1),(4)}", "{(2,1,1),(3,1)}", "{(2,2)}_+", "{(2,2)}_-"},
     {
         {1, 1, 0, 2, 2, 1, 2},
         {0, 1, 3, 4, 5, 7, 8},
         {0, 0, 0, 1, 3, 3, 2},
         {0, 0, 0, 1, 3, 3, 2},
     }},
};
}  // namespace

const GoldenTable* golden_table(CartanType t) {
    for (const auto& g : kTables)
        if (g.type == t) return &g;
    return nullptr;
}

}  // namespace sfd
