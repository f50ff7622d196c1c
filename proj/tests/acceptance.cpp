/* Acceptance gate: one line per criterion, exit nonzero if any fails. */

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "omegac/checks.hpp"
#include "omegac/colim.hpp"
#include "omegac/linalg.hpp"
#include "omegac/twodim.hpp"

using namespace omegac;

namespace {

int failures = 0;

void expect(bool ok, const std::string& msg) {
    if (!ok) throw Error("AcceptanceFailure", msg);
}

void criterion(int n, const std::string& title, const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string verdict = "PASS", detail;
    try {
        body();
    } catch (const std::exception& e) {
        verdict = "FAIL";
        detail = e.what();
        ++failures;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << verdict << "  " << n << ". " << title << "  (" << (long)ms << " ms)";
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << std::endl;
}

std::shared_ptr<const BasedADC> shared(BasedADC K) {
    return std::make_shared<const BasedADC>(std::move(K));
}

std::mt19937& rng() {
    static std::mt19937 gen([] {
        const char* s = std::getenv("OMEGAC_SEED");
        return s ? (unsigned)std::atol(s) : 31337u;
    }());
    return gen;
}

GlobularSum random_gs(int maxdim) {
    GlobularSum g;
    if (maxdim <= 0) return g;
    std::uniform_int_distribution<int> nseg(0, 2);
    int s = nseg(rng());
    for (int i = 0; i < s; ++i) g.branches.push_back(random_gs(maxdim - 1));
    return g;
}

const std::vector<const char*> kFixtures = {"*", "[*]", "[[*]]", "[*,*]", "[[*],*]"};

/* shared between criteria 1 and 11 */
std::vector<BasedADC> fuzz_corpus;

Int coeff_sum(const Chain& c) {
    Int s = 0;
    for (auto& [id, co] : c.coeffs) s += linalg::iabs(co);
    return s;
}

bool composable(const Cell& x, const Cell& y, int k) {
    if (x.dim() != y.dim() || k < 0 || k >= x.dim()) return false;
    for (int i = 0; i < k; ++i)
        if (x.array.rows[i] != y.array.rows[i]) return false;
    return x.array.minus(k) == y.array.plus(k);
}

/* naive rank over Q by fraction-free elimination: the linalg oracle */
int naive_rank(Matrix m) {
    int r = 0;
    for (int j = 0; j < m.cols && r < m.rows; ++j) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, j) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int jj = 0; jj < m.cols; ++jj) std::swap(m.at(r, jj), m.at(p, jj));
        for (int i = r + 1; i < m.rows; ++i)
            if (m.at(i, j) != 0) {
                Int a = m.at(r, j), b = m.at(i, j);
                for (int jj = 0; jj < m.cols; ++jj) m.at(i, jj) = a * m.at(i, jj) - b * m.at(r, jj);
            }
        ++r;
    }
    return r;
}

} // namespace

int main() {
    criterion(1, "ADC axioms on a 500-case constructor fuzz corpus", [] {
        std::uniform_int_distribution<int> pick(0, 5);
        int cases = 0;
        while (cases < 500) {
            BasedADC K = lambda_gs(random_gs(2));
            BasedADC out;
            switch (pick(rng())) {
            case 0: out = tensor(K, interval()); break;
            case 1: out = *cone(K).complex; break;
            case 2: out = *cocone(K).complex; break;
            case 3: out = *suspend(K).complex; break;
            case 4: out = *wedge(K, Side::Left).complex; break;
            default: out = *wedge(K, Side::Right).complex; break;
            }
            out.validate(); // ∂∂ = 0, e∂ = 0, degree bookkeeping
            expect(out.max_deg() <= 3, "constructor output above dimension 3");
            fuzz_corpus.push_back(std::move(out));
            ++cases;
        }
        expect(cases == 500, "short corpus");
    });

    criterion(2, "cell counts equal hom counts from globes (anchors 6 and 4)", [] {
        std::vector<const char*> fixtures = {"*", "[*]", "[[*]]", "[*,*]", "[[*],*]", "[[[*,*]],*]"};
        for (const char* g : fixtures) {
            GlobularSum gs = parse_gs(g);
            auto K = shared(lambda_gs(gs));
            for (int n = 0; n <= gs.dim() + 1; ++n) {
                size_t cells = enumerate_cells(K, n, (int)K->basis.size()).size();
                size_t homs = enumerate_hom(globe_gs(n), gs).size();
                std::ostringstream at;
                at << g << " at dimension " << n << ": " << cells << " cells vs " << homs << " homs";
                expect(cells == homs, at.str());
            }
        }
        expect(enumerate_hom(globe_gs(1), parse_gs("[*,*]")).size() == 6, "anchor |Hom(D1,[2])| = 6");
        expect(enumerate_hom(globe_gs(1), globe_gs(2)).size() == 4, "anchor |Hom(D1,D2)| = 4");
    });

    criterion(3, "Gray basis arithmetic: tensor and cone counts, triangle table", [] {
        BasedADC D1 = globe_adc(1);
        expect(tensor(D1, interval()).degree_counts() == std::vector<int>{4, 4, 1}, "D1⊗[1] counts");
        PointedADC cn = cone(D1);
        const BasedADC& C = *cn.complex;
        expect(C.degree_counts() == std::vector<int>{3, 3, 1}, "D1⋆1 counts");
        expect(C.diff_of("e1⋆∅") == Chain::unit(0, "e0+⋆∅") - Chain::unit(0, "e0-⋆∅"), "∂(e1⋆∅)");
        expect(C.diff_of("e0-⋆1") == Chain::unit(0, "∅⋆1") - Chain::unit(0, "e0-⋆∅"), "∂(e0-⋆1)");
        expect(C.diff_of("e0+⋆1") == Chain::unit(0, "∅⋆1") - Chain::unit(0, "e0+⋆∅"), "∂(e0+⋆1)");
        Chain filler(1);
        filler.add("e0+⋆1", 1);
        filler.add("e0-⋆1", -1);
        filler.add("e1⋆∅", 1);
        expect(C.diff_of("e1⋆1") == filler, "∂(e1⋆1)");
    });

    criterion(4, "explicit globe cylinders for n <= 3", [] {
        for (int n = 0; n <= 3; ++n) {
            CheckReport r = check_globe_cylinder(n);
            expect(r.verdict == "pass", "n = " + std::to_string(n) + ": " + r.witness);
        }
    });

    criterion(5, "cylinder colimit formula with unique isomorphism on 5 fixtures", [] {
        for (const char* g : kFixtures) {
            CheckReport r = check_cylinder_formula(parse_gs(g));
            expect(r.verdict == "pass", std::string(g) + ": " + r.witness);
        }
    });

    criterion(6, "cone and ◦-cone colimit formulas on the same fixtures", [] {
        for (const char* g : kFixtures) {
            CheckReport r = check_star_formulas(parse_gs(g));
            expect(r.verdict == "pass", std::string(g) + ": " + r.witness);
        }
    });

    criterion(7, "square battery over D0, D1, D2", [] {
        for (const char* g : {"*", "[*]", "[[*]]"}) {
            CheckReport r = check_squares(parse_gs(g));
            expect(r.verdict == "pass", std::string(g) + ": " + r.witness);
        }
    });

    criterion(8, "rigidity: only the identity automorphism", [] {
        auto only_id = [](std::shared_ptr<const BasedADC> K, const std::string& what) {
            auto as = isos(K, K);
            expect(as.size() == 1, what + ": automorphism count " + std::to_string(as.size()));
            for (auto& [b, d] : K->basis)
                expect(as[0].image(b) == Chain::unit(d, b), what + ": non-identity automorphism");
        };
        only_id(shared(tensor(globe_adc(2), interval())), "D2⊗[1]");
        only_id(shared(*cone(globe_adc(1)).complex), "D1⋆1");
        for (const char* g : kFixtures) only_id(shared(lambda_gs(parse_gs(g))), g);
    });

    criterion(9, "theta factorizations recompose, flags hold, unique by brute force", [] {
        std::vector<std::pair<GlobularSum, GlobularSum>> pairs;
        for (const char* g : kFixtures) {
            pairs.push_back({globe_gs(1), parse_gs(g)});
            pairs.push_back({globe_gs(2), parse_gs(g)});
        }
        for (auto& [a, b] : pairs)
            for (auto& m : enumerate_hom(a, b)) {
                std::string at = gs_to_string(a) + " -> " + gs_to_string(b);
                auto [sigma, mono] = factor_reedy(m);
                expect(compose_tm(mono, sigma) == m, at + ": reedy recomposition");
                expect(classify(sigma).degenerate && classify(mono).mono, at + ": reedy flags");
                int rc = 0;
                for (auto& s : degenerate_quotients(a))
                    for (auto& i : enumerate_hom(s.tgt, b))
                        if (compose_tm(i, s) == m && classify(i).mono) ++rc;
                expect(rc == 1, at + ": reedy factorization not unique (" + std::to_string(rc) + ")");

                auto [alg, glob] = factor_alg_glob(m);
                expect(compose_tm(glob, alg) == m, at + ": alg/glob recomposition");
                expect(classify(alg).algebraic && classify(glob).globular, at + ": alg/glob flags");
                int ac = 0;
                for (auto& i : globular_subobjects(b))
                    for (auto& h : enumerate_hom(a, i.src))
                        if (compose_tm(i, h) == m && classify(h).algebraic) ++ac;
                expect(ac == 1, at + ": alg/glob factorization not unique (" + std::to_string(ac) + ")");
            }
    });

    criterion(10, "2-cell decomposition over all orderings, plus the converse", [] {
        for (const char* e : {"[[*,*]]", "[[*,*],[*]]"}) {
            auto K = shared(lambda_gs(parse_gs(e)));
            std::vector<Cell> two_cells = enumerate_cells(K, 2, 3);

            // blocks: 2-cells whose class is a single generator (whiskered atoms)
            std::vector<Cell> blocks;
            for (const Cell& c : two_cells)
                if (coeff_sum(cell_class(c)) == 1) blocks.push_back(c);

            for (const Cell& v : two_cells) {
                // every ordering decomposes and recomposes (checked inside decompose)
                for (auto& ord : orderings(*K, v)) {
                    std::vector<Cell> out = decompose(*K, v, ord);
                    expect(out.size() == ord.size(), std::string(e) + ": block count mismatch");
                    for (size_t i = 0; i < out.size(); ++i)
                        expect(detail::supp(cell_class(out[i])) == std::set<std::string>{ord[i]},
                               std::string(e) + ": block " + std::to_string(i) + " has the wrong generator");
                }

                // converse: every *₁-factorization into single-generator blocks
                // lists the generators in a linear extension of the level-1 order
                Precedence P = precedence(*K, v, 1);
                int depth = (int)coeff_sum(cell_class(v)).convert_to<long long>();
                std::function<void(const Cell&, std::vector<std::string>&)> dfs =
                    [&](const Cell& acc, std::vector<std::string>& order) {
                        if ((int)order.size() == depth) {
                            if (!(acc == v)) return;
                            for (size_t i = 0; i < order.size(); ++i)
                                for (size_t j = i + 1; j < order.size(); ++j)
                                    expect(!P.less(order[j], order[i]),
                                           std::string(e) + ": factorization order " + order[j] + " after " +
                                               order[i] + " violates the level-1 precedence");
                            return;
                        }
                        for (const Cell& b : blocks) {
                            if (!composable(acc, b, 1)) continue;
                            order.push_back(*detail::supp(cell_class(b)).begin());
                            dfs(compose_cells(acc, b, 1), order);
                            order.pop_back();
                        }
                    };
                if (depth >= 1)
                    for (const Cell& b : blocks) {
                        std::vector<std::string> order{*detail::supp(cell_class(b)).begin()};
                        dfs(b, order);
                    }
            }
        }
    });

    criterion(11, "dualities: involution, tensor reversal, cone/cocone exchange", [] {
        size_t n = std::min<size_t>(fuzz_corpus.size(), 200);
        for (size_t i = 0; i < n; ++i)
            for (const Duality& S : {Duality::op(), Duality::co(), Duality::full(), Duality::t()})
                expect(dual(dual(fuzz_corpus[i], S), S) == fuzz_corpus[i], "involution on the fuzz corpus");

        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) {
                auto lhs = shared(dual(tensor(globe_adc(a), globe_adc(b)), Duality::op()));
                auto rhs = shared(tensor(dual(globe_adc(b), Duality::op()), dual(globe_adc(a), Duality::op())));
                std::string at = "(D" + std::to_string(a) + "⊗D" + std::to_string(b) + ")^op";
                auto fs = isos(lhs, rhs);
                expect(fs.size() == 1, at + ": iso count " + std::to_string(fs.size()));
            }

        for (const char* g : kFixtures) {
            BasedADC K = lambda_gs(parse_gs(g));
            BasedADC lhs = dual(*cone(K).complex, Duality::full());
            BasedADC rhs = *cocone(dual(K, Duality::full())).complex;
            expect(lhs == rhs, std::string(g) + ": (C⋆1)^∘ vs 1 co⋆ C^∘");
            expect(isos(shared(std::move(lhs)), shared(std::move(rhs))).size() == 1,
                   std::string(g) + ": exchange iso not unique");
        }
    });

    criterion(12, "omega-category axioms, exhaustive at bound 4", [] {
        for (const char* e : {"[*,*]", "[[*]]", "[[*,*]]"}) {
            auto K = shared(lambda_gs(parse_gs(e)));
            std::string at(e);
            for (int dim = 1; dim <= K->max_deg(); ++dim) {
                std::vector<Cell> cells = enumerate_cells(K, dim, 4);
                for (int k = 0; k < dim; ++k) {
                    for (const Cell& x : cells) {
                        // unit laws
                        expect(compose_cells(x, unit_cell(boundary(x, k, -1), dim), k) == x, at + ": right unit");
                        expect(compose_cells(unit_cell(boundary(x, k, +1), dim), x, k) == x, at + ": left unit");
                        for (const Cell& y : cells) {
                            if (!composable(x, y, k)) continue;
                            Cell xy = compose_cells(x, y, k);
                            expect(is_cell(*K, xy.array), at + ": composite not a cell");
                            // boundary axioms
                            expect(boundary(xy, k, -1) == boundary(y, k, -1), at + ": d_k^- of composite");
                            expect(boundary(xy, k, +1) == boundary(x, k, +1), at + ": d_k^+ of composite");
                            for (int j = 0; j < k; ++j)
                                for (int s : {-1, +1})
                                    expect(boundary(xy, j, s) == boundary(x, j, s), at + ": low boundary");
                            // associativity
                            for (const Cell& z : cells) {
                                if (!composable(y, z, k)) continue;
                                expect(compose_cells(xy, z, k) == compose_cells(x, compose_cells(y, z, k), k),
                                       at + ": associativity");
                            }
                        }
                    }
                    // interchange against every higher level
                    for (int l = k + 1; l < dim; ++l)
                        for (const Cell& x : cells)
                            for (const Cell& y : cells) {
                                if (!composable(x, y, l)) continue;
                                Cell xy = compose_cells(x, y, l);
                                for (const Cell& z : cells)
                                    for (const Cell& w : cells) {
                                        if (!composable(z, w, l)) continue;
                                        Cell zw = compose_cells(z, w, l);
                                        if (!composable(xy, zw, k)) continue;
                                        if (!composable(x, z, k) || !composable(y, w, k)) continue;
                                        expect(compose_cells(xy, zw, k) ==
                                                   compose_cells(compose_cells(x, z, k), compose_cells(y, w, k), l),
                                               at + ": interchange");
                                    }
                            }
                }
            }
        }
    });

    criterion(13, "integer linear algebra vs naive elimination oracle", [] {
        std::uniform_int_distribution<int> dim(0, 12), val(-9, 9);
        for (int t = 0; t < 200; ++t) {
            Matrix A(dim(rng()), dim(rng()));
            for (auto& x : A.a) x = val(rng());
            int r = naive_rank(A);
            auto s = linalg::smith(A);
            expect(s.rank == r, "smith rank");
            expect(s.U.mul(A).mul(s.V) == s.D, "smith factorization");
            expect(linalg::iabs(linalg::determinant(s.U)) == 1 && linalg::iabs(linalg::determinant(s.V)) == 1,
                   "smith transforms not unimodular");
            auto h = linalg::hermite(A);
            expect(h.rank == r, "hermite rank");
            expect(A.mul(h.V) == h.H, "hermite factorization");
            auto ker = linalg::kernel(A);
            expect((int)ker.size() == A.cols - r, "kernel dimension");
            for (auto& v : ker)
                for (auto& x : A.apply(v)) expect(x == 0, "kernel vector not in the kernel");
        }
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
