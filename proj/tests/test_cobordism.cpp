#include "catch_amalgamated.hpp"

#include "cutpaste/cobordism.hpp"
#include "support.hpp"

#include <algorithm>

using namespace cutpaste;
using namespace cutpaste::cobordism;
using testing::error_kind;

namespace {

CobordismWord w(const char* text) { return parse_word(text); }

ComponentRecord record(int genus, std::vector<int> in, std::vector<int> out) { return {genus, std::move(in), std::move(out)}; }

}  // namespace

TEST_CASE("parsing words") {
  CHECK(w("cap ; cup").is_closed());
  const auto disk = w("cap | cap ; pants");
  CHECK(disk.in_arity() == 0);
  CHECK(disk.out_arity() == 1);
  CHECK(error_kind([] { parse_word("pants ; pants"); }) == ErrorKind::ArityMismatch);
  CHECK(error_kind([] { parse_word("cap ; frob"); }) == ErrorKind::SyntaxError);
  CHECK(testing::error_message([] { parse_word("cap ; frob"); }).find("position 6") != std::string::npos);
  CHECK(error_kind([] { parse_word("cap | acap"); }) == ErrorKind::SyntaxError);
  CHECK(error_kind([] { parse_word("cap ;; cup"); }) == ErrorKind::SyntaxError);
  CHECK(w("").empty());
  CHECK(w("acap ; acup").dim() == 1);
}

TEST_CASE("printing words") {
  for (const char* text : {"cap ; cup", "cap | cap ; pants", "copants ; swap ; pants", "acap ; pid | pid ; acup"})
    CHECK(to_string(w(text)) == text);
}

TEST_CASE("composition and tensor") {
  CHECK(compose(w("cap"), w("cup")) == w("cap ; cup"));
  const auto torus_tube = compose(w("copants"), w("pants"));
  CHECK(word_chi(torus_tube) == -2);
  CHECK(normal_form(torus_tube).components == std::vector{record(1, {0}, {0})});
  CHECK(error_kind([] { compose(parse_word("cap"), parse_word("pants")); }) == ErrorKind::ArityMismatch);
  CHECK(error_kind([] { compose(parse_word("cap"), parse_word("acup | acup")); }) != std::nullopt);

  const auto t = tensor(w("cap ; copants"), w("id"));
  CHECK(t.in_arity() == 1);
  CHECK(t.out_arity() == 3);
  CHECK(identity(2, 3) == w("id | id | id"));
}

TEST_CASE("normal forms") {
  CHECK(normal_form(w("cap ; cup")).components == std::vector{record(0, {}, {})});
  CHECK(normal_form(w("copants ; pants")).components == std::vector{record(1, {0}, {0})});
  CHECK(normal_form(w("cap | cap ; pants")).components == std::vector{record(0, {}, {0})});
  CHECK(normal_form(w("swap")).components == std::vector{record(0, {0}, {1}), record(0, {1}, {0})});
  CHECK(normal_form(w("cap ; copants ; pants ; copants ; pants ; cup")).components == std::vector{record(2, {}, {})});
}

TEST_CASE("equivalence") {
  CHECK_FALSE(equivalent(w("id"), w("copants ; pants")));
  CHECK(equivalent(w("swap ; swap"), w("id | id")));
  CHECK(equivalent(w("cap | id ; pants"), w("id")));
  CHECK(equivalent(w("copants ; id | cup"), w("id")));
  CHECK(equivalent(w("swap ; pants"), w("pants")));
  CHECK(error_kind([] { equivalent(parse_word("id"), parse_word("id | id")); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("one-dimensional words") {
  const auto circle = one_manifold_class(w("acap ; acup"));
  CHECK(circle.circles == 1);
  CHECK(circle.arcs == 0);
  const auto arcs = one_manifold_class(w("pid | pid ; acup"));
  CHECK(arcs.arcs == 1);
  CHECK(arcs.circles == 0);
  CHECK(word_chi(w("acap ; acup")) == 0);
  CHECK(word_chi(w("acap")) == 1);
  CHECK(error_kind([] { one_manifold_class(parse_word("cap")); }) == ErrorKind::WrongDimension);
}

TEST_CASE("canonical words realise their class") {
  for (int g = 0; g <= 3; ++g)
    for (int in = 0; in <= 3; ++in)
      for (int out = 0; out <= 3; ++out) {
        const auto c = normal_form(canonical_word(g, in, out));
        REQUIRE(c.components.size() == 1);
        CHECK(c.components.front().genus == g);
        CHECK(c.components.front().in_positions.size() == static_cast<std::size_t>(in));
        CHECK(c.components.front().out_positions.size() == static_cast<std::size_t>(out));
      }
}

TEST_CASE("properties of random words") {
  Rng rng(derive_seed(31, 0));
  for (int t = 0; t < 200; ++t) {
    const int in = uniform_int(rng, 0, 3);
    const int out = uniform_int(rng, 0, 3);
    const auto m = random_word(rng, in, out, 5);
    REQUIRE(m.in_arity() == in);
    REQUIRE(m.out_arity() == out);
    INFO(to_string(m));
    CHECK(word_chi(m) == class_chi(normal_form(m)));
    CHECK(parse_word(to_string(m)) == m);
    CHECK(equivalent(m, scramble(rng, m, 5)));

    // tensor: multiset union of components, output positions shifted
    const auto n = random_word(rng, uniform_int(rng, 0, 2), uniform_int(rng, 0, 2), 4);
    const auto joint = normal_form(tensor(m, n)).components;
    auto expected = normal_form(m).components;
    for (auto r : normal_form(n).components) {
      for (auto& p : r.in_positions) p += in;
      for (auto& p : r.out_positions) p += out;
      expected.push_back(r);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(joint == expected);
    CHECK(word_chi(tensor(m, n)) == word_chi(m) + word_chi(n));
  }
}

TEST_CASE("random one-dimensional words") {
  Rng rng(derive_seed(31, 1));
  for (int t = 0; t < 100; ++t) {
    const int in = uniform_int(rng, 0, 3);
    const int out = in + 2 * uniform_int(rng, 0, 1);
    const auto m = random_word_dim1(rng, in, out, 5);
    CHECK(m.in_arity() == in);
    CHECK(m.out_arity() == out);
    const auto c = one_manifold_class(m);
    CHECK(2 * c.arcs == in + out);
    CHECK(equivalent(m, scramble(rng, m, 3)));
  }
}
