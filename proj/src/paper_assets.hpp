#pragma once

// Raw matrix transcriptions; see scripts/extract_assets.py.
namespace z4forge::paperdata::assets {

extern const char* const kRM15;
extern const char* const kG40;
extern const char* const kC40_7PRIME_A;
extern const char* const kC32_7;
extern const char* const kC32_8;
extern const char* const kC32_9;
extern const char* const kC32_10;
extern const char* const kC32_11;
extern const char* const kC32_12;
extern const char* const kC32_13;
extern const char* const kC32_14;
extern const char* const kC32_15;
extern const char* const kC40_8;
extern const char* const kC40_9;
extern const char* const kC40_10;
extern const char* const kC40_11;
extern const char* const kC40_12;
extern const char* const kC40_13;
extern const char* const kC40_14;
extern const char* const kC40_15;
extern const char* const kC40_16;
extern const char* const kC40_17;
extern const char* const kC40_18;
extern const char* const kC40_19;

}  // namespace z4forge::paperdata::assets
