#pragma once

// The bundled presentation corpus, shared by the unit suites, the acceptance
// suite and data/corpus.txt.

namespace corpus {

// right-handed trefoil, three presentations of the same diagram
inline constexpr const char* kTrefoil = "XyXYxY";
inline constexpr const char* kTrefoilRotated = "xYXyXY";
inline constexpr const char* kTrefoilL1 = "xYX^2Y";

// 5_2
inline constexpr const char* kFiveTwo = "XYxYXyxyXYxYX";

// 10_161
inline constexpr const char* kTenOneSixtyOne = "XyXyxYxyXy^2XyxYxyXyXYxYXYxY";

// D+(T_{2,3}, 6), diagram presentation and its pseudo-geometric variant
inline constexpr const char* kDoubledTrefoil = "Xyx^3YX^3Yx^3yX^2yx^3YX^3Yx^3yX^4";
inline constexpr const char* kDoubledTrefoilVariant = "X^4yx^3YX^4Yx^3yXyx^3YX^4Yx^3y";

// T_{2,7} presentation with only elementary primitive disk words
inline constexpr const char* kTorus27 = "YX^2YxYX^2Yx^2";

// quasi-geometric trefoil presentation whose reduction stalls
inline constexpr const char* kStallTrefoil = "YX^3Yxyx";

inline constexpr const char* kAll[] = {
    kTrefoil,        kTrefoilRotated, kTrefoilL1,           kFiveTwo, kTenOneSixtyOne,
    kDoubledTrefoil, kDoubledTrefoilVariant, kTorus27, kStallTrefoil,
};

}  // namespace corpus
