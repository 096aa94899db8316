#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "occam/core.hpp"
#include "occam/errors.hpp"

using namespace occam;

TEST_CASE("alphabet helpers") {
  CHECK(bits_per_symbol(Alphabet::Binary) == 1);
  CHECK(bits_per_symbol(Alphabet::Dna) == 2);
  CHECK(symbol_index(Alphabet::Dna, 'G') == 2);
  CHECK(symbol_at(Alphabet::Dna, 3) == 'T');
  CHECK(symbol_valid(Alphabet::Binary, '1'));
  CHECK_FALSE(symbol_valid(Alphabet::Binary, '2'));
  CHECK_THROWS_AS(symbol_index(Alphabet::Binary, 'A'), InputFormatError);
  CHECK_THROWS_AS(validate_example(Alphabet::Dna, "ACGU"), InputFormatError);
  CHECK_NOTHROW(validate_example(Alphabet::Dna, "ACGT"));
  CHECK(parse_alphabet("dna") == Alphabet::Dna);
  CHECK_THROWS_AS(parse_alphabet("rna"), InputFormatError);
}

TEST_CASE("monomial accepts and text round trip") {
  Monomial m = parse_monomial("x1&!x3", 3);
  CHECK(m.literal_count() == 2);
  CHECK(m.accepts("110"));
  CHECK(m.accepts("100"));
  CHECK_FALSE(m.accepts("111"));
  CHECK_FALSE(m.accepts("010"));
  CHECK(to_text(m) == "x1&!x3");
  CHECK(parse_monomial(to_text(m), 3) == m);
  CHECK_THROWS_AS(m.accepts("10"), std::invalid_argument);

  Monomial top = Monomial::always_true(4);
  CHECK(top.accepts("0000"));
  CHECK(to_text(top) == "true");
  CHECK(parse_monomial("true", 4) == top);

  Monomial bottom = Monomial::all_literals(2);
  CHECK(bottom.has_both());
  CHECK_FALSE(bottom.accepts("01"));
  CHECK(parse_monomial(to_text(bottom), 2) == bottom);

  CHECK_THROWS_AS(parse_monomial("x0", 3), InputFormatError);
  CHECK_THROWS_AS(parse_monomial("x4", 3), InputFormatError);
  CHECK_THROWS_AS(parse_monomial("y1", 3), InputFormatError);
  CHECK_THROWS_AS(parse_monomial("x1&&x2", 3), InputFormatError);
}

TEST_CASE("monomial literal containment") {
  Monomial big = parse_monomial("x1&!x2&x3", 3);
  CHECK(big.contains_literals_of(parse_monomial("x1&x3", 3)));
  CHECK(big.contains_literals_of(parse_monomial("true", 3)));
  CHECK_FALSE(big.contains_literals_of(parse_monomial("x2", 3)));
  CHECK(Monomial::all_literals(3).contains_literals_of(big));
}

TEST_CASE("dnf accepts and width") {
  DnfFormula f{3, {parse_monomial("x1&x2", 3), parse_monomial("!x3", 3)}};
  CHECK(f.width() == 2);
  CHECK(f.accepts("110"));
  CHECK(f.accepts("010"));
  CHECK_FALSE(f.accepts("011"));
  CHECK(to_text(f) == "x1&x2 | !x3");
  DnfFormula empty{3, {}};
  CHECK_FALSE(empty.accepts("101"));
  CHECK(to_text(empty) == "false");
}

TEST_CASE("threshold circuit gates") {
  // AND via threshold 2, OR via threshold 1, NOT via negative weight.
  ThresholdCircuit andc{2, {{2, {1, 1}, 2, {0, 1}}}, 2};
  andc.validate();
  CHECK(andc.eval("11"));
  CHECK_FALSE(andc.eval("10"));
  ThresholdCircuit orc{2, {{2, {1, 1}, 1, {0, 1}}}, 2};
  CHECK(orc.eval("10"));
  CHECK_FALSE(orc.eval("00"));
  ThresholdCircuit notc{1, {{1, {-1}, 0, {0}}}, 1};
  CHECK(notc.eval("0"));
  CHECK_FALSE(notc.eval("1"));

  // Two layers: x0 XOR x1 = (x0 OR x1) AND NOT(x0 AND x1).
  ThresholdCircuit xorc{2,
                        {{2, {1, 1}, 1, {0, 1}},
                         {3, {1, 1}, 2, {0, 1}},
                         {4, {1, -1}, 1, {2, 3}}},
                        4};
  xorc.validate();
  CHECK(xorc.eval("10"));
  CHECK(xorc.eval("01"));
  CHECK_FALSE(xorc.eval("00"));
  CHECK_FALSE(xorc.eval("11"));

  // Output may be a bare variable.
  ThresholdCircuit proj{3, {}, 1};
  proj.validate();
  CHECK(proj.eval("010"));
  CHECK_FALSE(proj.eval("101"));
}

TEST_CASE("threshold circuit validation") {
  ThresholdCircuit bad_id{2, {{1, {1}, 1, {0}}}, 1};  // gate id below n
  CHECK_THROWS_AS(bad_id.validate(), std::invalid_argument);
  ThresholdCircuit fwd{2, {{2, {1}, 1, {3}}}, 2};  // input from later gate
  CHECK_THROWS_AS(fwd.validate(), std::invalid_argument);
  ThresholdCircuit arity{2, {{2, {1, 1}, 1, {0}}}, 2};
  CHECK_THROWS_AS(arity.validate(), std::invalid_argument);
  ThresholdCircuit ghost{2, {{3, {1}, 1, {2}}}, 3};  // id 2 never defined
  CHECK_THROWS_AS(ghost.validate(), std::invalid_argument);
  ThresholdCircuit bad_out{2, {{2, {1}, 1, {0}}}, 5};
  CHECK_THROWS_AS(bad_out.validate(), std::invalid_argument);
}

TEST_CASE("superstring membership") {
  SuperstringRep r{"ACGTAC", 3};
  CHECK(r.contains("ACG"));
  CHECK(r.contains("CGT"));
  CHECK(r.contains("TAC"));
  CHECK_FALSE(r.contains("CAT"));
  CHECK_THROWS_AS(r.contains("AC"), std::invalid_argument);
}

TEST_CASE("representation dispatch") {
  Representation rep = parse_monomial("x2", 2);
  CHECK(system_of(rep) == SystemId::Monomial);
  CHECK(dimension_of(rep) == 2);
  CHECK(evaluate(rep, "01"));
  CHECK_FALSE(evaluate(rep, "10"));
  CHECK(system_alphabet(SystemId::Superstring) == Alphabet::Dna);
  CHECK(system_alphabet(SystemId::KDnf) == Alphabet::Binary);
  CHECK(parse_system("threshold") == SystemId::Threshold);
  CHECK(std::string(system_name(SystemId::KDnf)) == "kdnf");
  CHECK_THROWS_AS(parse_system("nfa"), InputFormatError);
}

TEST_CASE("canonical encodings: frozen shapes") {
  Monomial m{{LiteralState::Positive, LiteralState::Absent,
              LiteralState::Negative}};
  BitString bits = encode_representation(m);
  CHECK(bits.to_text() == "010010");
  CHECK(representation_length_bits(m) == 6);

  SuperstringRep s{"ACGT", 2};
  CHECK(encode_representation(s).to_text() == "00011011");
  CHECK(representation_length_bits(s) == 8);

  DnfFormula f{2, {parse_monomial("x1", 2)}};
  // one term: prefix-free 1 = "101", then "01" "00"
  CHECK(encode_representation(f).to_text() == "1010100");
  CHECK(representation_length_bits(f) == 7);
}

TEST_CASE("encodings round trip and match their declared lengths") {
  RngStream rng(2024, 0);
  for (int round = 0; round < 50; ++round) {
    int n = 1 + int(rng.next_below(6));
    Representation reps[] = {
        random_monomial(n, rng),
        DnfFormula{n, {random_monomial_of_size(n, std::min(2, n), rng),
                       random_monomial_of_size(n, 1, rng)}},
        ThresholdCircuit{n, {{n, {1, -2}, 0, {0, 0}}}, n},
        SuperstringRep{"GATTACA", n},
    };
    for (const Representation& rep : reps) {
      BitString bits = encode_representation(rep);
      CHECK(bits.size() == representation_length_bits(rep));
      Representation back =
          decode_representation(system_of(rep), bits, dimension_of(rep));
      CHECK(back == rep);
    }
  }
}

TEST_CASE("decoders reject malformed codes") {
  BitString five = BitString::from_text("01010");
  CHECK_THROWS_AS(decode_representation(SystemId::Monomial, five, 3),
                  InputFormatError);
  BitString odd = BitString::from_text("010");
  CHECK_THROWS_AS(decode_representation(SystemId::Superstring, odd, 1),
                  InputFormatError);
  // DNF with declared one term but trailing garbage.
  BitString dnf = BitString::from_text("10101001");
  CHECK_THROWS_AS(decode_representation(SystemId::KDnf, dnf, 2),
                  InputFormatError);
}

TEST_CASE("labeled samples") {
  LabeledSample s({{"01", true}, {"11", false}, {"01", true}});
  CHECK(s.size() == 3);
  CHECK(s.distinct_count() == 2);
  CHECK(s.distinct()[0].value == "01");
  CHECK(s.multiplicity("01") == 2);
  CHECK(s.multiplicity("00") == 0);
  CHECK(s.label_of("11") == false);
  CHECK_FALSE(s.label_of("00").has_value());
  CHECK_THROWS_AS(LabeledSample({{"0", true}, {"0", false}}),
                  InputFormatError);
}

TEST_CASE("sample error counts multiplicity") {
  Representation rep = parse_monomial("x1", 2);
  LabeledSample s({{"10", true}, {"11", false}, {"11", false}, {"00", false}});
  // rep mislabels "11" (accepts but labeled 0), twice.
  CHECK(sample_error(rep, s) == doctest::Approx(0.5));
  CHECK_FALSE(consistent_with(rep, s));
  LabeledSample ok({{"10", true}, {"01", false}});
  CHECK(sample_error(rep, ok) == 0.0);
  CHECK(consistent_with(rep, ok));
}

TEST_CASE("finite distributions validate and pick") {
  CHECK_THROWS_AS(FiniteDistribution({"0", "1"}, {0.7, 0.7}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteDistribution({"0", "0"}, {0.5, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteDistribution({"0"}, {-1.0}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteDistribution({}, {}), std::invalid_argument);

  FiniteDistribution d({"A", "C", "G"}, {0.5, 0.25, 0.25});
  CHECK(d.pick(0.0) == "A");
  CHECK(d.pick(0.49) == "A");
  CHECK(d.pick(0.5) == "C");
  CHECK(d.pick(0.74) == "C");
  CHECK(d.pick(0.75) == "G");
  CHECK(d.pick(0.999999) == "G");
  CHECK(d.mass_where([](const Example& x) { return x != "C"; }) ==
        doctest::Approx(0.75));
}

TEST_CASE("rng streams are deterministic and splittable") {
  RngStream a(42, 7), b(42, 7), c(42, 8);
  std::vector<std::uint64_t> va, vb, vc;
  for (int i = 0; i < 16; ++i) {
    va.push_back(a.next_u64());
    vb.push_back(b.next_u64());
    vc.push_back(c.next_u64());
  }
  CHECK(va == vb);
  CHECK(va != vc);

  RngStream s1 = RngStream(42, 7).split(3);
  RngStream s2 = RngStream(42, 7).split(3);
  RngStream s3 = RngStream(42, 7).split(4);
  CHECK(s1.next_u64() == s2.next_u64());
  CHECK(s1.next_u64() != s3.next_u64());

  RngStream u(9, 0);
  double total = 0.0;
  for (int i = 0; i < 20000; ++i) {
    double v = u.next_unit();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
    total += v;
  }
  CHECK(total / 20000 == doctest::Approx(0.5).epsilon(0.02));

  RngStream w(1, 1);
  for (int i = 0; i < 1000; ++i) CHECK(w.next_below(7) < 7);
}

TEST_CASE("oracle labels draws by the target") {
  auto domain = full_domain(Alphabet::Binary, 3);
  Representation target = parse_monomial("x1&!x2", 3);
  Oracle oracle(FiniteDistribution::uniform(domain), target, RngStream(5, 0));
  auto draws = oracle.draw_many(200);
  CHECK(draws.size() == 200);
  for (const auto& d : draws)
    CHECK(d.label == evaluate(target, d.value));
  // Deterministic replay.
  Oracle replay(FiniteDistribution::uniform(domain), target, RngStream(5, 0));
  CHECK(replay.draw_many(200) == draws);
}

TEST_CASE("symmetric difference error") {
  auto domain = full_domain(Alphabet::Binary, 2);
  FiniteDistribution uni = FiniteDistribution::uniform(domain);
  Representation a = parse_monomial("x1", 2);
  Representation b = parse_monomial("true", 2);
  CHECK(symmetric_difference_error(a, b, uni) == doctest::Approx(0.5));
  CHECK(symmetric_difference_error(a, a, uni) == 0.0);
  FiniteDistribution skew({"00", "10"}, {0.9, 0.1});
  CHECK(symmetric_difference_error(a, b, skew) == doctest::Approx(0.9));
}

TEST_CASE("monomial class enumeration") {
  CHECK(pow3(0) == 1);
  CHECK(pow3(4) == 81);
  CHECK(monomial_class_size(1) == 4);
  CHECK(monomial_class_size(4) == 82);
  CHECK(monomial_by_index(0, 2) == Monomial::always_true(2));
  CHECK(monomial_by_index(80, 4).literal_count() == 4);
  CHECK(monomial_by_index(81, 4) == Monomial::all_literals(4));
  CHECK_THROWS_AS(monomial_by_index(82, 4), std::invalid_argument);

  // Indexing is a bijection onto the class.
  std::set<std::vector<LiteralState>> seen;
  for (std::uint64_t i = 0; i < monomial_class_size(3); ++i)
    seen.insert(monomial_by_index(i, 3).states);
  CHECK(seen.size() == 28);
}

TEST_CASE("random monomials honor their size pin") {
  RngStream rng(77, 0);
  for (int k = 0; k <= 5; ++k) {
    Monomial m = random_monomial_of_size(5, k, rng);
    CHECK(m.literal_count() == k);
    CHECK_FALSE(m.has_both());
  }
  CHECK_THROWS_AS(random_monomial_of_size(3, 4, rng), std::invalid_argument);
}

TEST_CASE("circuit enumeration visits the whole envelope") {
  CircuitEnvelope tiny{1, 1, 1, -1, 1};
  std::vector<ThresholdCircuit> all;
  std::uint64_t count = for_each_circuit(tiny, [&](const ThresholdCircuit& c) {
    all.push_back(c);
    return true;
  });
  // One variable, weight in {-1, 1}, thresholds spanning [lo, hi + 1].
  CHECK(count == 6);
  CHECK(circuit_class_size(tiny) == 6);
  for (const auto& c : all) CHECK_NOTHROW(c.validate());

  CircuitEnvelope wide{4, 1, 3, -2, 2};
  CHECK(circuit_class_size(wide) == 2200);

  // Early stop.
  std::uint64_t seen = 0;
  for_each_circuit(wide, [&](const ThresholdCircuit&) {
    return ++seen < 10;
  });
  CHECK(seen == 10);

  // Multi-gate envelopes include the single-gate circuits.
  CircuitEnvelope two{2, 2, 2, -1, 1};
  std::uint64_t singles = 0, doubles = 0;
  for_each_circuit(two, [&](const ThresholdCircuit& c) {
    (c.gates.size() == 1 ? singles : doubles)++;
    CHECK_NOTHROW(c.validate());
    return true;
  });
  CHECK(singles > 0);
  CHECK(doubles > 0);
}

TEST_CASE("full domains") {
  auto bin2 = full_domain(Alphabet::Binary, 2);
  CHECK(bin2 == std::vector<Example>{"00", "01", "10", "11"});
  auto dna1 = full_domain(Alphabet::Dna, 1);
  CHECK(dna1 == std::vector<Example>{"A", "C", "G", "T"});
  CHECK(full_domain(Alphabet::Binary, 0) == std::vector<Example>{""});
  CHECK_THROWS_AS(full_domain(Alphabet::Binary, 21), InfeasibleError);
  CHECK_THROWS_AS(full_domain(Alphabet::Dna, 11), InfeasibleError);
}
