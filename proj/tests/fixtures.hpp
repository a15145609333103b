#ifndef POWERSUMS_TESTS_FIXTURES_HPP
#define POWERSUMS_TESTS_FIXTURES_HPP

#include <string>
#include <string_view>

#include "powersums/bridge.hpp"
#include "powersums/equation.hpp"
#include "powersums/pipeline.hpp"
#include "powersums/quartic.hpp"
#include "powersums/weierstrass.hpp"

// Worked examples shared by the test suites.
namespace powersums::fixtures {

inline Rational R(std::string_view text) { return Rational::parse(text); }

inline std::string fixture_path(const std::string& name) {
  return std::string(POWERSUMS_FIXTURE_DIR) + "/" + name;
}

// X1^5 + X2^5 + X3^5 = Y1^3 + Y2^3 + Y3^3 with x1 = 1, alpha = beta = 2.
inline DirectProblem three_term_problem() {
  return {{R("1"), R("1"), {R("1")}, {R("1")}}, {R("1"), {R("2")}, {R("2")}}};
}
inline QuarticCurve three_term_quartic() { return {R("17/3"), 0, R("5/3"), 0, R("5/3")}; }
// The same quartic after t = T + 1.
inline QuarticCurve three_term_shifted() {
  return {R("17/3"), R("68/3"), R("107/3"), R("26"), R("9")};
}
inline WeierstrassCurve three_term_cubic() {
  return {R("26/3"), R("152/9"), R("136"), R("-204"), R("-10336/3")};
}
inline WeierstrassCurve three_term_completed() {
  return {0, R("107/3"), 0, R("1156/3"), R("3536/3")};
}
inline CurvePoint three_term_g1() { return {R("-44/3"), R("20/3")}; }
inline CurvePoint three_term_g2() { return {R("-152/9"), R("140/27")}; }
// Pre-images of g1 and g2 on the long cubic (M = Y + 13/3 X + 68 inverted).
inline CurvePoint three_term_g1_long() { return {R("-44/3"), R("20/9")}; }
inline CurvePoint three_term_g2_long() { return {R("-152/9"), R("280/27")}; }

// 5 (X1^5 + X2^5) = 3 (Y1^3 + Y2^3) with x1 = 1.
inline DirectProblem five_three_problem() { return {{R("5"), R("3"), {}, {}}, {R("1"), {}, {}}}; }
inline QuarticCurve five_three_quartic() { return {R("5/9"), 0, R("47/9"), 0, R("25/9")}; }
inline WeierstrassCurve five_three_cubic() {
  return {0, R("47/9"), 0, R("-500/81"), R("-23500/729")};
}
inline CurvePoint five_three_p() {
  return {R("-609566/164025"), R("-225298052/66430125")};
}

// 6 (X1^5 + ... + X4^5) = 85 (Y1^3 + ... + Y4^3), paired, xs = (1, 2), y1 = 1.
inline PairedProblem six_85_problem() {
  return {{{R("6"), R("6")}, {R("85"), R("85")}}, {{R("1"), R("2")}, {R("1")}}};
}
inline QuarticCurve six_85_quartic() { return {R("4/85"), 0, R("26/51"), 0, R("1")}; }
inline WeierstrassCurve six_85_cubic() { return {0, R("26/51"), 0, R("-16/85"), R("-416/4335")}; }
inline CurvePoint six_85_p1() { return {R("2/3"), R("28/51")}; }
inline CurvePoint six_85_p2() { return {R("20777/21675"), R("-1908281/1842375")}; }

// 3 (X1^5 + ... + X4^5) = 17 (Y1^3 + ... + Y4^3), paired, xs = (1, 2), y1 = 1.
inline PairedProblem three_17_problem() {
  return {{{R("3"), R("3")}, {R("17"), R("17")}}, {{R("1"), R("2")}, {R("1")}}};
}
inline QuarticCurve three_17_quartic() { return {R("2/17"), 0, R("116/51"), 0, R("4")}; }
inline WeierstrassCurve three_17_cubic() {
  return {0, R("116/51"), 0, R("-32/17"), R("-3712/867")};
}
inline CurvePoint three_17_p() { return {R("4"), R("160/17")}; }

inline std::vector<Rational> Rs(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(R(t));
  return out;
}

}  // namespace powersums::fixtures

#endif  // POWERSUMS_TESTS_FIXTURES_HPP
