#pragma once

// Switchboard and vector data for the worked examples shipped with the
// library; the selftest suite and the unit tests both consume these.

namespace ncsf::fixtures {

inline const char* fig2 = R"(# N=3, n=5
v 23212
v 32212
v 31221
v 22131
v 22311
v 13221
v 21321
v 12321
v 32112
v 23121
v 32121
v 23111
v 21131
v 13211
v 31211
v 21311
e 2 23212 32212
e 4 23212 23121
e 3 32212 32112
e 4 32212 32121
e 4 31221 31211
e 2 31221 23121
e 3 22131 21321
e 4 22131 22311
e 2 22131 21131
e 3 22311 23121
e 4 13221 13211
e 3 13221 12321
e 2 13221 21321
e 3 32121 31211
e 3 23111 21311
e 2 23111 31211
e 4 21131 21311
e 2 13211 21311
)";

inline const char* fig3_left = R"(# two components
v 2134
v 2314
v 2341
v 2143
v 2413
e 2 2134 2314
e 3 2314 2341
e 2 2143 2413
e 3 2143 2413
)";

inline const char* fig3_right = R"(# connected, same vertices
v 2134
v 2314
v 2341
v 2143
v 2413
e 2 2134 2314
e 3 2314 2143
e 2 2143 2413
e 3 2341 2413
)";

// The 20-vertex counterexample board, N = n = 6.
inline const char* fig4 = R"(
v 456213
v 465123
v 645123
v 641523
v 641253
v 456231
v 462513
v 624513
v 624153
v 452631
v 462351
v 264153
v 261543
v 216543
v 425631
v 426351
v 426315
v 264315
v 432615
v 432165
e 2 264315 426315
e 5 264315 264153
e 5 456213 456231
e 3 456213 462513
e 4 425631 426351
e 2 425631 452631
e 4 432165 432615
e 5 432165 432615
e 4 462513 465123
e 2 462513 624513
e 5 462513 462351
e 5 641523 641253
e 3 641523 645123
e 4 641523 645123
e 5 426351 426315
e 2 426351 462351
e 3 426351 462351
e 2 645123 465123
e 2 216543 261543
e 3 216543 261543
e 4 264153 261543
e 2 264153 624153
e 3 426315 432615
e 3 452631 456231
e 4 452631 456231
e 4 624513 624153
e 5 624513 624153
e 3 624153 641253
)";

// The three boards whose vertex sums lie in the Hecke ideal's perp.
inline const char* fig9_top = R"(
v 2112
v 2212
v 2121
v 1211
v 1221
e 2 2112 2212
e 3 2212 2121
e 2 2121 1211
e 3 1211 1221
)";

inline const char* fig9_middle = R"(
v 2122
v 1212
v 1121
e 2 2122 1212
e 3 1212 1121
)";

inline const char* fig9_bottom = R"(
v 2111
v 2211
v 2221
e 2 2111 2211
e 3 2211 2221
)";

// LLT switchboards for the tuple (2/1, 1, 2) at k = 3, one per inv level.
inline const char* fig5_t0 = "v 1235\n";

inline const char* fig5_t1 = R"(
v 1325
v 2135
v 1253
e 2 1325 2135
e 3 1325 1253
)";

inline const char* fig5_t2 = R"(
v 2513
v 2153
v 2351
v 2315
v 3125
e 2 2513 2153
e 3 2513 2153
e 3 2351 2315
e 2 2315 3125
)";

inline const char* fig5_t3 = R"(
v 3251
v 2531
v 3215
e 2 3251 2531
e 3 3251 3215
)";

// The 21-vertex LLT switchboard for (3/2, 33/11, 2/1), k = 3, t = 3.
inline const char* fig7 = R"(
v 465714
v 546714
v 457614
v 465174
v 546174
v 461574
v 416574
v 541674
v 457164
v 451764
v 415764
v 467145
v 461745
v 416745
v 471465
v 417465
v 547146
v 475146
v 541746
v 471546
v 417546
e 2 465714 546714
e 4 465714 465174
e 5 465714 465174
e 3 465714 457614
e 4 546714 546174
e 5 546714 546174
e 5 457614 457164
e 2 465174 546174
e 3 546174 541674
e 2 461574 416574
e 3 461574 416574
e 5 461574 461745
e 5 416574 416745
e 4 416574 415764
e 5 541674 541746
e 3 457164 451764
e 4 457164 451764
e 2 451764 415764
e 3 467145 461745
e 4 467145 461745
e 2 461745 416745
e 4 416745 417465
e 2 471465 417465
e 3 471465 417465
e 5 471465 471546
e 5 417465 417546
e 3 547146 541746
e 4 547146 541746
e 2 547146 475146
e 4 475146 471546
e 2 471546 417546
e 3 471546 417546
)";

// The 20-word nonnegative vector whose symmetric function is not Schur
// positive; it is the vertex sum of the counterexample board above.
inline const char* eq27_words[20] = {
    "432165", "432615", "426315", "264315", "264153", "261543", "216543",
    "426351", "624153", "425631", "462351", "624513", "641253",
    "452631", "462513", "641523", "456231", "456213", "465123", "645123",
};

// Seven plus-words and two minus-words expressing J_(2,2,2) modulo IS+Ist.
inline const char* j222_plus[7] = {"321654", "426513", "562143", "436512",
                                   "563412", "462315", "452316"};
inline const char* j222_minus[2] = {"462351", "452361"};

// The four five-word expressions valid modulo every Iassaf:k + Ist.
inline const char* j222_all_k[4][5] = {
    {"321654", "426513", "562143", "431652", "563412"},
    {"321654", "462153", "521643", "436512", "563412"},
    {"321654", "462513", "521643", "436152", "563412"},
    {"321654", "462513", "526143", "431652", "563412"},
};

} // namespace ncsf::fixtures
