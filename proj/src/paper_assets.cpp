// Verbatim matrix transcriptions backing the paperdata registry.
// Generated by scripts/extract_assets.py; do not edit rows by hand.

#include "paper_assets.hpp"

namespace z4forge::paperdata::assets {

const char* const kRM15 = R"(
1111 1111 1111 1111 1111 1111 1111 1111
1111 1111 1111 1111 0000 0000 0000 0000
1111 1111 0000 0000 1111 1111 0000 0000
1111 0000 1111 0000 1111 0000 1111 0000
1100 1100 1100 1100 1100 1100 1100 1100
1010 1010 1010 1010 1010 1010 1010 1010
)";

const char* const kG40 = R"(
111111111111111111111111111111111 1111111
101101001011110000011001100000101 0100000
100000101011011000100010001111011 2210000
100110011011001101111111101000100 0203000
011110110111111001011010010001010 0002300
110100101111000011100110000010100 0202010
010111101001111110010110110100010 0002003
)";

const char* const kC40_7PRIME_A = R"(
100000000000001011111111111030232
011011011101000001011000101230302
011100001110011110001110100311332
100000111111113101101010010201033
010110010110101100111101000312111
010001111010000010000001011311013
111111111111111000000000000020200
)";

const char* const kC32_7 = R"(
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 2 0 0 3 3 3 2 2
1 1 0 0 1 1 1 1 0 0 1 1 0 0 0 1 1 2 1 1 1 1 0 1 2
1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 1 0 1 1 0 1 0 1 1 1
0 1 1 0 0 1 1 0 0 1 1 0 0 1 1 0 1 1 0 1 0 1 1 1 1
0 0 1 1 1 1 0 0 0 0 1 1 1 1 0 0 0 0 1 1 2 2 2 0 3
0 0 1 1 1 1 1 1 1 1 0 0 0 0 0 1 1 3 0 0 2 2 2 0 0
1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0
)";

const char* const kC32_8 = R"(
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 3 3 3 2 2 2 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 3 2 1 2 0 2
1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 1 0 1 0 1 1 1 1 1
1 0 1 0 1 0 0 1 0 1 0 1 0 1 1 1 0 0 3 3 1 3 3 1
1 1 1 1 0 0 1 1 0 0 0 0 1 1 0 1 1 0 2 0 0 3 0 0
1 1 0 0 1 1 1 1 0 0 1 1 0 0 0 1 1 0 2 0 2 2 3 0
0 0 1 1 1 1 1 1 1 1 0 0 0 0 0 1 1 2 2 0 2 2 2 3
1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0
)";

const char* const kC32_9 = R"(
0 0 0 0 0 0 2 0 0 0 0 0 0 2 0 0 3 3 0 0 0 3 2
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 3 2 2 0 2 1
1 0 1 0 1 0 1 1 0 1 0 1 0 1 1 0 1 0 1 1 1 1 1
1 0 1 0 1 0 1 1 0 1 0 1 0 3 1 0 0 3 1 3 1 3 1
1 1 1 1 0 0 2 1 1 1 1 0 0 2 1 1 2 2 2 0 3 0 0
1 1 0 0 1 1 2 1 1 0 0 1 1 0 1 1 2 2 3 2 0 0 2
0 0 1 1 1 1 2 0 0 1 1 1 1 2 1 1 0 2 0 3 2 2 0
0 0 0 0 0 0 0 1 1 1 1 1 1 1 0 0 2 0 0 2 2 0 2
1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 2 2 2 2 0
)";

const char* const kC32_10 = R"(
0 0 0 0 0 0 2 0 0 0 0 0 0 3 3 3 2 2 2 0 0 2
0 0 0 0 0 0 2 0 0 0 0 0 0 1 3 2 1 2 0 0 0 0
0 0 0 0 0 0 2 0 0 0 0 0 0 1 3 2 0 1 2 0 2 2
0 0 0 0 0 0 2 0 0 0 0 0 0 1 3 2 2 0 1 2 2 0
0 0 1 1 1 1 0 0 0 1 1 1 1 3 3 2 0 0 2 3 2 0
1 1 0 0 1 1 2 1 1 0 0 1 1 3 3 2 0 2 2 0 3 2
1 0 1 0 1 0 1 1 0 1 0 1 0 1 0 1 1 1 1 1 1 1
0 1 0 1 1 0 3 0 1 0 1 1 0 0 3 3 1 1 1 3 3 3
0 0 0 0 0 0 0 1 1 1 1 1 1 2 0 0 2 0 2 2 0 1
1 1 1 1 1 1 1 0 0 0 0 0 0 2 0 0 0 0 0 2 0 0
)";

const char* const kC32_11 = R"(
0 0 0 0 0 0 2 0 0 0 0 0 1 3 1 2 0 2 0 0 0
0 0 0 0 0 0 2 0 0 2 0 0 1 3 0 1 0 2 2 0 2
0 0 0 0 0 0 0 0 0 2 0 0 3 3 0 0 3 2 0 0 2
0 0 0 0 0 0 0 0 0 2 0 0 1 3 0 0 2 1 2 0 0
0 0 0 0 0 0 2 0 0 2 0 0 1 3 2 0 0 0 1 0 0
1 1 0 0 1 1 2 1 1 0 1 1 3 3 0 2 0 0 0 2 3
1 0 1 0 1 0 1 1 0 1 1 0 1 0 1 1 1 1 1 1 1
0 1 1 0 0 1 3 0 1 1 0 1 0 3 1 1 3 1 1 1 3
0 0 1 1 1 1 0 0 0 2 1 1 0 0 0 0 0 0 0 1 2
0 0 1 1 1 1 2 1 1 1 0 0 0 0 0 2 2 2 2 2 0
1 1 1 1 1 1 1 0 0 2 0 0 2 0 0 0 2 2 0 0 0
)";

const char* const kC32_12 = R"(
0 0 0 0 0 0 2 0 0 3 3 2 0 2 0 0 2 2 3 0
0 0 0 0 0 0 0 0 0 3 3 0 0 2 0 2 2 2 2 3
0 0 0 0 0 0 2 0 0 1 3 2 2 0 2 0 2 1 2 2
0 0 0 0 0 0 2 0 0 1 3 0 2 2 0 0 1 0 2 2
0 0 0 0 0 0 2 0 0 3 3 0 2 0 0 3 0 0 2 0
0 0 0 0 0 0 2 0 0 3 3 0 0 0 3 2 0 2 2 2
1 0 1 0 1 0 1 1 0 1 0 1 1 1 1 1 1 1 1 1
1 0 1 0 1 0 1 1 0 0 3 1 1 3 3 3 1 1 3 3
1 1 1 1 0 0 2 1 1 2 0 0 2 1 2 2 0 2 0 0
1 1 0 0 1 1 0 1 1 0 0 0 1 2 0 2 2 2 0 0
0 0 1 1 1 1 0 1 1 0 0 1 0 0 0 0 0 2 2 0
1 1 1 1 1 1 1 0 0 0 0 0 0 2 2 2 2 2 2 0
)";

const char* const kC32_13 = R"(
0 0 0 0 0 0 1 1 3 0 2 2 0 0 2 2 2 2 2
0 0 0 0 0 0 3 1 0 1 2 0 0 2 0 2 0 2 2
0 0 0 0 0 0 3 3 0 2 3 0 2 2 0 0 0 2 2
0 0 0 0 0 0 1 3 2 2 0 1 2 0 0 0 0 2 2
0 0 0 0 0 0 3 3 2 0 0 2 3 0 0 2 0 0 0
0 0 0 0 0 0 3 3 2 2 0 0 2 3 2 2 0 0 0
0 0 0 0 0 0 1 3 2 2 0 2 0 2 1 2 2 0 2
0 0 0 0 0 0 1 1 0 2 2 0 0 0 2 3 0 2 2
0 0 1 1 1 1 3 3 0 0 2 0 2 2 2 2 1 0 2
1 1 0 0 1 1 1 3 2 0 2 0 0 0 2 2 2 3 2
1 0 1 0 1 0 1 0 3 3 1 1 1 1 1 3 3 3 3
0 1 0 1 1 0 0 1 3 1 1 3 1 1 3 3 3 1 3
1 1 1 1 1 1 2 2 2 2 2 2 0 0 2 2 2 2 1
)";

const char* const kC32_14 = R"(
0 0 0 0 0 1 1 3 0 2 0 0 2 2 2 0 0 2
0 0 0 0 0 1 1 2 3 0 0 2 2 0 2 2 0 0
0 0 2 0 0 1 3 2 0 1 0 0 2 2 0 2 0 0
0 0 0 0 0 3 1 0 0 2 1 2 0 2 0 0 2 2
0 0 0 0 0 1 3 0 2 2 0 1 2 0 2 0 2 0
0 0 0 0 0 1 3 2 2 0 2 0 1 0 2 2 0 0
0 0 0 0 0 3 1 2 0 0 0 2 2 1 0 0 0 0
0 0 0 0 0 3 1 2 2 2 2 0 0 2 1 0 2 2
0 0 2 0 0 3 3 2 0 2 0 0 2 0 0 3 2 0
1 1 0 1 1 1 3 2 0 2 0 2 2 2 0 0 2 3
1 0 1 1 0 3 0 1 1 3 1 3 3 1 1 3 3 1
0 1 1 0 1 0 3 1 1 1 3 1 1 3 3 3 1 3
0 0 0 1 1 2 0 2 2 2 0 0 2 2 0 0 3 2
1 1 3 0 0 2 2 0 0 2 0 0 0 0 0 2 0 2
)";

const char* const kC32_15 = R"(
0 0 1 1 0 2 2 2 0 2 2 2 0 0 0 2 3
0 0 1 3 0 0 0 2 2 0 2 0 2 0 0 1 2
0 0 3 3 2 2 0 2 2 2 2 0 0 0 3 0 2
0 0 3 1 2 2 0 2 2 2 2 0 0 1 0 2 0
0 0 1 1 0 0 2 3 0 0 0 2 2 2 0 2 0
0 0 1 1 0 2 0 2 3 0 2 2 0 2 0 2 2
0 0 3 3 0 2 2 2 2 3 2 2 0 2 0 0 0
0 0 3 1 0 0 0 0 2 2 1 0 2 0 2 0 2
0 0 1 1 2 2 0 0 0 0 0 3 0 0 2 0 0
0 0 3 1 0 2 0 2 0 0 0 0 1 2 0 0 0
1 0 3 0 1 3 3 1 1 3 1 1 1 1 3 3 1
1 0 0 1 3 3 3 3 3 1 1 3 1 1 1 3 3
1 1 0 0 0 0 3 2 0 2 0 0 0 0 0 0 2
1 1 0 0 2 3 2 0 2 2 0 2 2 2 2 0 2
1 1 0 2 3 0 2 2 2 2 2 0 2 0 0 2 2
)";

const char* const kC40_8 = R"(
11211101101110100310100112102303
01311010010110010300111111130210
01100100001110100111011112012220
11001111011010001201110113003301
11001000111101000210000010131312
11200100010001011101001103021013
00011111111111111100000000022000
11300000000000000000000002000202
)";

const char* const kC40_9 = R"(
1011110100101100103011111110102
1013110011000000000111100332213
0002011110110100012111011201210
0020101010100111001010010213131
1100001000100010111100111021112
0022111011011101001010010302231
0000111111111111111000000020020
1130000000000000000000000020202
1123000000000000000000000020020
)";

const char* const kC40_10 = R"(
103110111100010111001011023131
011330110011001110001103313323
002221101000100110110111133012
000220010001000101011100310332
002220100011110100101101202003
110021010101001110101111102220
000201111111111111010000102220
113020000000000000000002002220
110230000000000000000000020002
112300000000000000000000200002
)";

const char* const kC40_11 = R"(
12001101101111010103011101331
01001101101111010101031121133
00000001111010111020003121200
02010010001101101001032332000
02100000111100110102100213022
13110101010100011032010133222
02011110011101111010111220200
00100111111101111032103022002
11000000000000000000002200023
11000000000000000020002202302
13000000000000000022022022012
)";

const char* const kC40_12 = R"(
1120000000000000000220023020
0022011110101110000033030222
0111111111110001101302313122
0022201111001101001002312221
0133101110110011110230103311
1120200000000000000202002322
1100011000000000000322022013
1011311011110101010333211300
0133111100101011111201213332
1132200000000000000202200000
1102300000000000000202022000
1103000000000000000202202200
)";

const char* const kC40_13 = R"(
110200000000000000022203222
011131010101101101000003101
110220010000010031111302003
000220111100110100120310212
011311111011001111032103110
110020000000000000022020302
011113001111010101011231311
002202011101111010132220021
011133101111010121013213321
113002000000000000002222202
112232000000000020000002022
112300000000000020002020200
110203000000000020022222202
)";

const char* const kC40_14 = R"(
11022020000000000032220020
11020030000000000202000202
10113131011001100113231131
10131111011100101213331301
11220000000000000203020222
00222020101011100322332313
10133330010111110213200300
00000200101011100120311332
11220000010011111122310200
01311331111110111133120022
11302020000000000220202200
11003220000000000202002000
11232000000000000200200222
11220320000000000222220002
)";

const char* const kC40_15 = R"(
1100022000000000232222022
1011313101100102333331133
0111313101110101031331323
1102200000000000203022000
1102020010101100322230113
1011331001011112011100120
1102000010101102320011330
0000202001001113100230020
1033331111111111133320220
1100200000000000202302020
1130222000000002022222022
1100320000000000220000220
1123200000000002020220020
1102203000000000002220000
1102032000000002002220222
)";

const char* const kC40_16 = R"(
112020000002002220302220
110020200003002022020020
000200000000000333020002
112002000000002222232002
011133301113001231111331
101113111103102220313102
101331111101100220313212
000022200100111132200203
112002001010112231002313
103333111113113310331200
112222000002002220003002
113002000002000202000002
112232000000000022020020
112302000002000222220200
112220300000000000222002
110003200002000000200022
)";

const char* const kC40_17 = R"(
11202002200000220232020
00000222200020033302020
11220000000020220003202
10313133101110321311131
10111331311100200013332
10313311311120220031321
11220020200121111222220
00222220001011023300011
10311311311131113031302
11200022000020022020322
11322002000000202200020
11023020200000200002220
11030200200000220220200
11022003200020200202000
11200220300000220002200
11220032000020202022002
11202322000020020022200
)";

const char* const kC40_18 = R"(
1100200220022202222302
0010210300202202002222
1300220020022220001202
0111231033331313331313
1310301330020222022220
1310100312010000000002
0211001113232220002022
1311011200232020002200
1300000000220222212202
1211031013133113131113
1300020222022012200020
1300200202220201202200
1301130320322020202000
1300200222222222000201
1100220022203020002022
1300000222022002022012
1100020020222302022002
1100000002202222320000
)";

const char* const kC40_19 = R"(
013002020002021202002
002330022000030000022
011200202202002320000
113030002100030202302
113212220120232221222
003133313011121330213
113230022222012003302
013222220200222212022
011222222202000222030
013002202012222022000
101233113131113113113
013200200202102002002
013002002222000002201
013220022201020220020
013202012020220002022
011022023222020002002
013220120202022202022
102312200022002022222
011003020220022222002
)";

}  // namespace z4forge::paperdata::assets
