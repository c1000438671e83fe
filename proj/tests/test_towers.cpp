#include <gtest/gtest.h>

#include <random>

#include "radnor/towers/classify.hpp"
#include "radnor/towers/constraints.hpp"

using namespace radnor;

namespace {

WeightCase case_a(Rational c = Rational(1, 20)) { return WeightCase::make(CaseTag::A, c); }

TowerSpec make_spec(const WeightCase& w, std::vector<std::array<long, 3>> rows) {
    TowerSpec s;
    s.weight = w;
    for (auto& r : rows) {
        s.levels.push_back({BigInt(r[0]), BigInt(r[1]), BigInt(r[2])});
    }
    return s;
}

std::vector<std::array<long, 3>> rows_of(const TowerSpec& s) {
    std::vector<std::array<long, 3>> out;
    for (auto& l : s.levels) {
        out.push_back({l.d.get_si(), l.p.get_si(), l.q.get_si()});
    }
    return out;
}

bool has_failure(const ConstraintReport& r, std::string_view name) {
    auto* c = r.find(name);
    return c && !c->holds;
}

} // namespace

TEST(WeightCase, Validation) {
    EXPECT_THROW(WeightCase::make(CaseTag::A), InvalidArgument);
    EXPECT_THROW(WeightCase::make(CaseTag::A, Rational(-1)), InvalidArgument);
    EXPECT_THROW(WeightCase::make(CaseTag::A, Rational(1), Rational(1, 2)), InvalidArgument);
    EXPECT_THROW(WeightCase::make(CaseTag::B1, std::nullopt, Rational(1)), InvalidArgument);
    EXPECT_NO_THROW(WeightCase::make(CaseTag::B1, std::nullopt, Rational(0)));
    EXPECT_THROW(WeightCase::make(CaseTag::B2, Rational(1), Rational(0)), InvalidArgument);
    EXPECT_THROW(WeightCase::make(CaseTag::B3, std::nullopt, Rational(1)), InvalidArgument);
    EXPECT_THROW(WeightCase::make(CaseTag::B3, Rational(1), Rational(1, 2)), InvalidArgument);
    EXPECT_EQ(WeightCase::make(CaseTag::C).gamma, 1);
    EXPECT_EQ(parse_case_tag("B2"), CaseTag::B2);
    EXPECT_THROW(parse_case_tag("D"), ParseError);
}

TEST(FEval, Examples) {
    auto a = f_eval(case_a(), BigInt(5), 128);
    EXPECT_LT(std::fabs(a.midpoint() - 1.2558986952713127), 1e-15);
    EXPECT_LT(a.width_exact(), Rational(1, BigInt(1) << 120));
    auto b3 = f_eval(WeightCase::make(CaseTag::B3, std::nullopt, Rational(1, 2)), BigInt(5), 128);
    auto l5 = log_interval(BigInt(5), 128);
    EXPECT_TRUE(b3.overlaps(l5));
    EXPECT_LT(b3.width_exact(), Rational(1, BigInt(1) << 120));
    auto b1 = f_eval(WeightCase::make(CaseTag::B1, std::nullopt, Rational(0)), BigInt(5), 128);
    EXPECT_LT(std::fabs(b1.midpoint() - 0.6213349345596118), 1e-15);
    EXPECT_THROW(f_eval(case_a(), BigInt(1), 64), InvalidArgument);
    EXPECT_THROW(f_eval(WeightCase::make(CaseTag::C), BigInt(5), 64), InvalidArgument);
    auto e = threshold(case_a(), BigInt(5), 128);
    EXPECT_LT(std::fabs(e.midpoint() - 3.5109922690850080), 1e-14);
}

TEST(CheckLevelConstraints, CaseAExamples) {
    auto spec = make_spec(case_a(), {{5, 5, 7}});
    auto ok = check_level_constraints(spec, 0);
    EXPECT_TRUE(ok.all_required_hold());
    for (auto& c : ok.constraints) {
        EXPECT_TRUE(c.holds) << c.name;
    }
    auto bad = check_level_constraints(make_spec(case_a(), {{5, 3, 7}}), 0);
    EXPECT_FALSE(bad.all_required_hold());
    EXPECT_TRUE(has_failure(bad, "exp(F) <= p"));
    EXPECT_TRUE(has_failure(bad, "min(d_1,p_1) > 3"));
    EXPECT_THROW(check_level_constraints(spec, 1), InvalidArgument);
}

TEST(CheckLevelConstraints, CaseCExample) {
    auto spec = make_spec(WeightCase::make(CaseTag::C), {{5, 5, 7}, {11, 11, 13}});
    for (auto& r : check_tower(spec)) {
        EXPECT_TRUE(r.all_required_hold());
    }
    auto broken = make_spec(WeightCase::make(CaseTag::C), {{5, 5, 7}, {7, 7, 11}});
    auto r = check_level_constraints(broken, 1);
    EXPECT_TRUE(has_failure(r, "2p_{i-1} < p_i"));
    EXPECT_TRUE(has_failure(r, "p_i > q_{i-1}"));
}

TEST(CheckLevelConstraints, GapVariantsReportedForCaseA) {
    auto spec = make_spec(case_a(), {{5, 5, 7}, {11, 7, 11}, {19, 13, 17}});
    auto r = check_level_constraints(spec, 1);
    EXPECT_TRUE(r.all_required_hold());
    auto* printed = r.find("gap max{d, 4f(d)} < exp(f(d')) [as printed]");
    auto* strong = r.find("gap max{d, 4exp(F)} < exp(F') [strengthened]");
    ASSERT_TRUE(printed && strong);
    EXPECT_TRUE(printed->holds && printed->required);
    EXPECT_FALSE(strong->holds);
    EXPECT_FALSE(strong->required);
    // 4 f(11) = 7.48 < 11 = d_2 governs the level-3 gap, so d_3 = 13 is too small
    auto early = make_spec(case_a(), {{5, 5, 7}, {11, 7, 11}, {13, 11, 13}});
    EXPECT_TRUE(has_failure(check_level_constraints(early, 2), "gap max{d, 4f(d)} < exp(f(d')) [as printed]"));
}

TEST(GenerateTower, CaseA) {
    auto spec = generate_tower(case_a(), 3);
    EXPECT_EQ(rows_of(spec), (std::vector<std::array<long, 3>>{{5, 5, 7}, {11, 7, 11}, {19, 13, 17}}));
    auto four = generate_tower(case_a(), 4);
    EXPECT_EQ(four.levels.back(), (TowerLevel{BigInt(29), BigInt(29), BigInt(31)}));
    auto big_c = generate_tower(case_a(Rational(2)), 3);
    EXPECT_EQ(rows_of(big_c),
              (std::vector<std::array<long, 3>>{{5, 60251, 60257}, {7, 3741943, 3741961}, {11, 13404313577L, 13404313607L}}));
}

TEST(GenerateTower, CaseB) {
    auto b2 = generate_tower(WeightCase::make(CaseTag::B2, Rational(3, 10), Rational(1, 2)), 3);
    EXPECT_EQ(rows_of(b2), (std::vector<std::array<long, 3>>{{41, 7, 11}, {157, 43, 47}, {307, 193, 197}}));
    auto b1 = generate_tower(WeightCase::make(CaseTag::B1, std::nullopt, Rational(0)), 4);
    EXPECT_EQ(rows_of(b1), (std::vector<std::array<long, 3>>{{5, 23, 29}, {11, 101, 103}, {17, 409, 419}, {29, 5501, 5503}}));
    auto b1h = generate_tower(WeightCase::make(CaseTag::B1, std::nullopt, Rational(1, 2)), 3);
    EXPECT_EQ(rows_of(b1h), (std::vector<std::array<long, 3>>{{5, 5, 7}, {227, 17, 19}, {1607, 229, 233}}));
    auto b3 = generate_tower(WeightCase::make(CaseTag::B3, std::nullopt, Rational(1, 2)), 4);
    EXPECT_EQ(rows_of(b3), (std::vector<std::array<long, 3>>{{5, 37, 41}, {7, 173, 179}, {11, 2851, 2857}, {17, 118387, 118399}}));
}

TEST(GenerateTower, CaseC) {
    auto c = generate_tower(WeightCase::make(CaseTag::C), 5);
    EXPECT_EQ(rows_of(c), (std::vector<std::array<long, 3>>{{5, 5, 7}, {11, 11, 13}, {23, 23, 29}, {47, 47, 53}, {97, 97, 101}}));
    auto hinted = generate_tower(WeightCase::make(CaseTag::C), 1, BigInt(100));
    EXPECT_EQ(hinted.levels.front(), (TowerLevel{BigInt(101), BigInt(101), BigInt(103)}));
}

TEST(GenerateTower, Refusals) {
    EXPECT_THROW(generate_tower(case_a(), 0), InvalidArgument);
    GenerateOptions small;
    small.max_bits = 4; // exp(F) at level 4 is about 24 > 2^4
    EXPECT_THROW(generate_tower(case_a(), 4, std::nullopt, small), GenerationStuck);
    GenerateOptions narrow;
    narrow.d_search_limit = 100;
    EXPECT_THROW(generate_tower(WeightCase::make(CaseTag::B1, std::nullopt, Rational(9, 10)), 2, std::nullopt, narrow),
                 GenerationStuck);
}

TEST(GenerateTower, DeterministicAndSelfConsistent) {
    std::vector<WeightCase> cases = {
        case_a(), case_a(Rational(1, 3)), case_a(Rational(1, 100)),
        WeightCase::make(CaseTag::B1, std::nullopt, Rational(0)),
        WeightCase::make(CaseTag::B1, std::nullopt, Rational(1, 4)),
        WeightCase::make(CaseTag::B2, Rational(1, 2), Rational(1, 3)),
        WeightCase::make(CaseTag::B2, Rational(3, 10), Rational(1, 2)),
        WeightCase::make(CaseTag::B3, std::nullopt, Rational(1, 2)),
        WeightCase::make(CaseTag::B3, std::nullopt, Rational(2, 3)),
        WeightCase::make(CaseTag::C),
    };
    for (const auto& w : cases) {
        auto spec = generate_tower(w, 3);
        ASSERT_EQ(spec, generate_tower(w, 3));
        for (std::size_t i = 0; i < spec.levels.size(); ++i) {
            auto report = check_level_constraints(spec, i);
            ASSERT_TRUE(report.all_required_hold()) << to_string(w.tag) << " level " << i + 1;
            if (i > 0 && w.tag != CaseTag::A) {
                ASSERT_GT(spec.levels[i].p, spec.levels[i - 1].q);
            }
        }
    }
}

TEST(GenerateTower, CaseALowerBoundIsExactlyC) {
    // log(exp(f(d)))/d - log(d)/(2(d-1)) = c by algebra
    for (auto c : {Rational(1, 20), Rational(1, 3), Rational(2)}) {
        auto w = case_a(c);
        auto spec = generate_tower(w, 3);
        for (auto& l : spec.levels) {
            auto diff = f_eval(w, l.d, 128) / l.d - detail::silverman_term(l.d, 128);
            ASSERT_TRUE(diff.contains(c));
            ASSERT_LT(diff.width_exact(), Rational(1, BigInt(1) << 100));
        }
    }
}

TEST(TowerSpecFormat, RoundTrip) {
    std::vector<TowerSpec> specs = {
        generate_tower(case_a(), 3),
        generate_tower(WeightCase::make(CaseTag::B2, Rational(3, 10), Rational(1, 2)), 2),
        generate_tower(WeightCase::make(CaseTag::C), 5),
        make_spec(case_a(Rational(7, 3)), {}),
    };
    for (const auto& s : specs) {
        std::string text = serialize(s);
        auto back = parse_tower_spec(text);
        ASSERT_EQ(back, s);
        ASSERT_EQ(serialize(back), text);
    }
    EXPECT_EQ(serialize(specs[0]), "format: tower-spec/1\ncase: A\ngamma: 0\nc: 1/20\nbase: Q(2^(1/3^j) : j >= 1)\n"
                                   "levels: 3\nlevel d p q\n1 5 5 7\n2 11 7 11\n3 19 13 17\n");
}

TEST(TowerSpecFormat, Rejections) {
    std::string good = serialize(generate_tower(case_a(), 1));
    EXPECT_NO_THROW(parse_tower_spec(good));
    auto bad = [&](std::string from, std::string to) {
        std::string s = good;
        s.replace(s.find(from), from.size(), to);
        return s;
    };
    EXPECT_THROW(parse_tower_spec(bad("tower-spec/1", "tower-spec/2")), ParseError);
    EXPECT_THROW(parse_tower_spec(bad("case: A", "case: Z")), ParseError);
    EXPECT_THROW(parse_tower_spec(bad("levels: 1", "levels: 2")), ParseError);
    EXPECT_THROW(parse_tower_spec(bad("1 5 5 7", "1 5 5")), ParseError);
    EXPECT_THROW(parse_tower_spec(bad("1 5 5 7", "2 5 5 7")), ParseError);
    EXPECT_THROW(parse_tower_spec(bad("1 5 5 7", "1 5 x 7")), ParseError);
    EXPECT_THROW(parse_tower_spec(good + "junk\n"), ParseError);
    EXPECT_THROW(parse_tower_spec(bad("c: 1/20", "c: none")), InvalidArgument);
    EXPECT_NO_THROW(parse_tower_spec("# comment\n" + good));
}

TEST(Classify, Examples) {
    auto a = classify_intervals(case_a(Rational(2)));
    EXPECT_EQ(a.bogomolov, (IntervalDescriptor{Rational(0), true}));
    EXPECT_EQ(a.northcott, (IntervalDescriptor{Rational(0), false}));
    EXPECT_EQ(a.nor, NorthcottNumber::finite(Rational(2)));
    EXPECT_EQ(a.bogomolov.to_string(), "[0,inf)");
    EXPECT_EQ(a.northcott.to_string(), "(0,inf)");
    auto b3 = classify_intervals(WeightCase::make(CaseTag::B3, std::nullopt, Rational(1, 2)));
    EXPECT_EQ(b3.bogomolov, (IntervalDescriptor{Rational(1, 2), true}));
    EXPECT_EQ(b3.northcott, b3.bogomolov);
    auto c = classify_intervals(WeightCase::make(CaseTag::C));
    EXPECT_EQ(c.northcott.to_string(), "[1,inf)");
    EXPECT_EQ(c.nor.kind, NorthcottNumber::Kind::Infinite);
    EXPECT_EQ(c.base_northcott.to_string(), "(1,inf)");
    auto b1 = classify_intervals(WeightCase::make(CaseTag::B1, std::nullopt, Rational(1, 4)));
    EXPECT_EQ(b1.bogomolov.to_string(), "(1/4,inf)");
    EXPECT_EQ(b1.nor.kind, NorthcottNumber::Kind::Zero);
}

TEST(Classify, NorthcottInsideBogomolovOverGammaGrid) {
    for (int k = 0; k < 20; ++k) {
        Rational g(k, 20);
        std::vector<WeightCase> cases = {WeightCase::make(CaseTag::A, Rational(k + 1, 7)),
                                         WeightCase::make(CaseTag::B1, std::nullopt, g), WeightCase::make(CaseTag::C)};
        if (k > 0) {
            cases.push_back(WeightCase::make(CaseTag::B2, Rational(k, 3), g));
            cases.push_back(WeightCase::make(CaseTag::B3, std::nullopt, g));
        }
        for (const auto& w : cases) {
            auto cl = classify_intervals(w);
            ASSERT_TRUE(cl.northcott.subset_of(cl.bogomolov));
            ASSERT_EQ(cl.northcott.infimum(), cl.bogomolov.infimum());
            ASSERT_EQ(cl.northcott.infimum(), w.gamma);
            if (w.tag == CaseTag::A || w.tag == CaseTag::B2) {
                ASSERT_EQ(cl.nor, NorthcottNumber::finite(*w.c));
            }
        }
    }
}
