#include "presmon/alphabet.hpp"
#include "presmon/grid_function.hpp"
#include "presmon/monoid.hpp"
#include "presmon/preservation.hpp"
#include "presmon/space.hpp"
#include "presmon/verifier.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace presmon;

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

bool all_ok = true;

void report(int number, bool ok, const std::string& text) {
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << text
              << "\n";
}

bool clean(const VerificationReport& r) {
    return r.status == VerificationStatus::verified && r.counterexamples.empty();
}

} // namespace

int main() {
    DistanceAlphabet small = parse_alphabet("0,1,2");
    DistanceAlphabet gappy = parse_alphabet("0,1,3");

    { // 1: discreteness reduces to three-point subspaces on <=5-point metrics
        auto start = Clock::now();
        VerificationReport r = verify_three_point_reduction(small, 5);
        long ms = ms_since(start);
        bool ok = clean(r) && r.instances_checked == 1099 && ms < 5000;
        std::ostringstream text;
        text << "discrete <=> all three-point subspaces discrete, every metric on "
                "<=5 points over 0,1,2 ("
             << r.instances_checked << " spaces, " << ms << " ms)";
        report(1, ok, text.str());
    }

    { // 2: ultrametric preservers = increasing and amenable, stable in max_points
        auto start = Clock::now();
        VerificationReport r = verify_ultrametric_characterization(small, 3);
        FunctionSet computed =
            preserving_functions(PreservationUniverse{small, 3, SpaceKind::ultrametric});
        std::vector<GridFunction> expected;
        FunctionSet everything = all_endofunctions(small);
        for (const GridFunction& f : everything.members()) {
            if (is_increasing(f) && is_amenable(f)) {
                expected.push_back(f);
            }
        }
        VerificationReport wide = verify_ultrametric_characterization(
            parse_alphabet("0,1,2,3"), 3);
        long ms = ms_since(start);
        bool ok = clean(r) && computed == FunctionSet(small, expected) &&
                  computed.size() == 3 && clean(wide) &&
                  wide.parameters["universe_size"] == 10 && ms < 5000;
        std::ostringstream text;
        text << "ultrametric preservers = increasing amenable functions, 3 members "
                "on 0,1,2 stable at 4 points, 10 members on 0,1,2,3 ("
             << ms << " ms)";
        report(2, ok, text.str());
    }

    { // 3: subadditive-increasing set = intersection of both universes on grids
        auto start = Clock::now();
        VerificationReport r2 = verify_si_intersection(std::int64_t{2});
        VerificationReport r3 = verify_si_intersection(std::int64_t{3});
        VerificationReport r4 = verify_si_intersection(std::int64_t{4});
        DistanceAlphabet grid2 = uniform_grid(2);
        FunctionSet both = intersect(
            preserving_functions(PreservationUniverse{grid2, 3, SpaceKind::metric}),
            preserving_functions(PreservationUniverse{grid2, 3, SpaceKind::ultrametric}));
        long ms = ms_since(start);
        bool ok = clean(r2) && clean(r3) && clean(r4) &&
                  si_functions(grid2).size() == 3 && both.size() == 3 && ms < 30000;
        std::ostringstream text;
        text << "subadditive increasing amenable = metric-preserving intersect "
                "ultrametric-preserving on grids 0..2, 0..3, 0..4; both sides have "
                "3 members at n=2 ("
             << ms << " ms)";
        report(3, ok, text.str());
    }

    { // 4: every submonoid of either universe is the preserving set of its orbit
        auto start = Clock::now();
        VerificationReport metric = verify_construction(small, SpaceKind::metric);
        VerificationReport ultra = verify_construction(small, SpaceKind::ultrametric);
        long ms = ms_since(start);
        bool ok = clean(metric) && metric.parameters["submonoids"] == 6 &&
                  metric.parameters["universe_size"] == 4 && clean(ultra) &&
                  ultra.parameters["submonoids"] == 4 &&
                  ultra.parameters["universe_size"] == 3 && ms < 10000;
        std::ostringstream text;
        text << "orbit construction realizes all 6 submonoids of the 4-member "
                "metric universe and all 4 of the 3-member ultrametric universe ("
             << ms << " ms)";
        report(4, ok, text.str());
    }

    { // 5: the subadditive-increasing instance of the construction
        FunctionSet si = si_functions(small);
        SpaceFamily orbit = orbit_family(si, max_ultrametric_space(small));
        FunctionSet p = preserving_functions(orbit);
        bool ok = si.size() == 3 && p == si;
        report(5, ok,
               "the orbit family of the 3 subadditive increasing amenable functions "
               "has exactly them as preservers");
    }

    { // 6: exhaustive discrete-characterization scan over the gappy alphabet
        auto start = Clock::now();
        VerificationReport r = verify_discrete_characterization(gappy, 3);
        long ms = ms_since(start);
        bool ok = clean(r) && r.instances_checked == 256 &&
                  r.parameters["spaces"] == 8 && ms < 120000;
        std::ostringstream text;
        text << "discrete families with rescaling closure <=> amenable preservers, "
                "all "
             << r.instances_checked
             << " families over the 8 metric spaces on <=3 points over 0,1,3, 0 "
                "divergences ("
             << ms << " ms)";
        report(6, ok, text.str());
    }

    { // 7: empty and one-point families pin down the full and zero-fixing sets
        FunctionSet p_empty = preserving_functions(SpaceFamily(small));
        SpaceFamily one_point(small, {DistanceMatrix(small, 1, {0})});
        FunctionSet p_one = preserving_functions(one_point);
        VerificationReport lattice = verify_one_point(small);
        bool ok = p_empty.size() == 27 && p_one.size() == 9 &&
                  p_one == zero_fixing_functions(small) && clean(lattice) &&
                  lattice.instances_checked == 2048;
        report(7, ok,
               "empty family admits all 27 functions, the one-point family exactly "
               "the 9 zero-fixing ones, and no family with a larger member does "
               "(2048-family lattice)");
    }

    { // 8: the swap-plus-identity submonoid is never a preserving set
        VerificationReport r = verify_unrealizable_submonoid(small, 3, true);
        bool ok = clean(r) && r.instances_checked == 2 + 2047;
        report(8, ok,
               "swap of 0 and 1 with the identity forms a submonoid excluded from "
               "every one of the 2047 nonempty families over <=3-point metrics");
    }

    { // 9: preserving sets of random families are always submonoids
        auto start = Clock::now();
        VerificationReport r = verify_submonoid_property(small, 1000, 7);
        long ms = ms_since(start);
        bool ok = clean(r) && r.instances_checked == 1002 && ms < 30000;
        std::ostringstream text;
        text << "1000 seeded random families all have submonoid preserving sets ("
             << ms << " ms)";
        report(9, ok, text.str());
    }

    { // 10: discrete families and two-point families share the amenable preservers
        VerificationReport r1 = verify_discrete_class_preservers(small, 3);
        VerificationReport r2 = verify_discrete_class_preservers(gappy, 3);
        bool ok = clean(r1) && r1.parameters["amenable_size"] == 4 && clean(r2) &&
                  r2.parameters["amenable_size"] == 4;
        report(10, ok,
               "all-discrete and all-two-point families admit exactly the 4 "
               "amenable functions on 0,1,2 and on 0,1,3");
    }

    { // 11: algebra laws of composition, closure and transform
        bool ok = true;
        for (const DistanceAlphabet& a : {uniform_grid(1), uniform_grid(2)}) {
            FunctionSet all = all_endofunctions(a);
            GridFunction id = identity_function(a);
            for (const GridFunction& f : all.members()) {
                ok = ok && compose(f, id) == f && compose(id, f) == f;
                for (const GridFunction& g : all.members()) {
                    for (const GridFunction& h : all.members()) {
                        ok = ok && compose(compose(f, g), h) ==
                                       compose(f, compose(g, h));
                    }
                }
            }
        }
        DistanceAlphabet tiny = uniform_grid(1);
        FunctionSet tiny_all = all_endofunctions(tiny);
        for (unsigned mask = 0; mask < 16; ++mask) {
            std::vector<GridFunction> picked;
            for (int i = 0; i < 4; ++i) {
                if (mask >> i & 1u) {
                    picked.push_back(tiny_all.members()[static_cast<std::size_t>(i)]);
                }
            }
            FunctionSet s(tiny, picked);
            FunctionSet c = monoid_closure(s);
            for (const GridFunction& f : s.members()) {
                ok = ok && c.contains(f);
            }
            ok = ok && monoid_closure(c) == c && is_submonoid(c);
        }
        FunctionSet big = all_endofunctions(small);
        for (const GridFunction& f : big.members()) {
            FunctionSet c = monoid_closure(FunctionSet(small, {f}));
            ok = ok && c.size() <= big.size() && monoid_closure(c) == c;
        }
        ok = ok && monoid_closure(big) == big;
        std::vector<DistanceMatrix> spaces;
        for (int n = 1; n <= 3; ++n) {
            SpaceFamily raw = enumerate_spaces(small, n, SpaceKind::raw);
            spaces.insert(spaces.end(), raw.spaces().begin(), raw.spaces().end());
        }
        for (const GridFunction& f : big.members()) {
            for (const GridFunction& g : big.members()) {
                GridFunction fg = compose(f, g);
                for (const DistanceMatrix& m : spaces) {
                    ok = ok && transform(transform(m, g), f) == transform(m, fg);
                }
            }
        }
        report(11, ok,
               "composition is associative with the identity neutral, closure is "
               "extensive idempotent and bounded, and transform is functorial over "
               "all small instances");
    }

    std::cout << (all_ok ? "ACCEPTANCE: all 11 criteria hold"
                         : "ACCEPTANCE: at least one criterion failed")
              << "\n";
    return all_ok ? 0 : 1;
}
