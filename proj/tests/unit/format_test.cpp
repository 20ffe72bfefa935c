#include <gtest/gtest.h>

#include "qw22/format.hpp"

using namespace qw22;

namespace {

using G = GeneratorSymbol;
const auto kJson = OutputMode::json;

}  // namespace

TEST(Json, Element) {
  EXPECT_EQ(format(element_from(G::L(3)), kJson),
            R"({"terms":[{"coeff":{"terms":[{"eq":0,"c":"1"}]},"t":0,"l":[[3,1]],"w":[]}]})");
  EXPECT_EQ(format(Element(), kJson), R"({"terms":[]})");
  EXPECT_EQ(format(normalize({G::L(0), G::T()}), kJson),
            R"({"terms":[{"coeff":{"terms":[{"eq":2,"c":"1"}]},"t":1,"l":[[0,1]],"w":[]}]})");
}

TEST(Json, TwoVariableCoefficient) {
  const Element x = normalize({G::L(2), G::L(1)}, Deformation::generalized);
  EXPECT_EQ(format(x, kJson),
            R"({"terms":[{"coeff":{"terms":[{"eq":-1,"ep":1,"c":"1"}]},"t":0,"l":[[1,1],[2,1]],"w":[]},)"
            R"({"coeff":{"terms":[{"eq":-1,"ep":0,"c":"-1"}]},"t":0,"l":[[3,1]],"w":[]}]})");
}

TEST(Json, Tensor) {
  EXPECT_EQ(format(coproduct(element_from(G::W(0))), kJson),
            R"({"terms":[{"coeff":{"terms":[{"eq":0,"c":"1"}]},"slots":[{"t":0,"l":[],"w":[]},{"t":0,"l":[],"w":[[0,1]]}]},)"
            R"({"coeff":{"terms":[{"eq":0,"c":"1"}]},"slots":[{"t":0,"l":[],"w":[[0,1]]},{"t":0,"l":[],"w":[]}]}]})");
}

TEST(Json, Numeric) {
  NumericElement x;
  x.add_term(NormalWord{0, {{1, 1}}, {}}, Rational(5, 2));
  EXPECT_EQ(format(x, kJson), R"({"terms":[{"coeff":"5/2","t":0,"l":[[1,1]],"w":[]}]})");
  EXPECT_EQ(format(x, OutputMode::text), "5/2 * L[1]");
}

TEST(Json, ModuleVector) {
  EXPECT_EQ(format(ModuleVector::basis(-2, 1), kJson),
            R"({"terms":[{"coeff":{"terms":[{"eq":0,"c":"1"}]},"k":-2,"eps":1}]})");
}

TEST(Text, Tensor) {
  EXPECT_EQ(format(coproduct(element_from(G::L(1))), OutputMode::text),
            "(L[1]) (x) (T) + (T) (x) (L[1])");
}

TEST(Report, TextAndJson) {
  CheckReport r;
  r.suite = "closed-forms";
  r.profile = "standard";
  r.cases_run = 12;
  r.wall_time_s = 3.5;
  EXPECT_EQ(format(r, OutputMode::text),
            "suite: closed-forms\nprofile: standard\n"
            "bounds: max-index=4 max-len=3 k-range=-8..8 cases=200\nseed: 1\n"
            "cases run: 12\ncases failed: 0\nfirst counterexample: none\n");
  EXPECT_EQ(format(r, kJson),
            R"({"suite":"closed-forms","profile":"standard","bounds":{"max_index":4,"max_len":3,)"
            R"("k_range":[-8,8],"cases":200},"seed":1,"cases_run":12,"cases_failed":0,)"
            R"("first_counterexample":null})");
}
