#include "sticks/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "sticks/exact.hpp"
#include "sticks/kfib.hpp"

namespace sticks {

namespace {

std::string vec_str(const std::vector<BigInt>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << ")";
    return out.str();
}

std::string rat_str(const BigRat& q) {
    std::ostringstream out;
    out << q;
    return out.str();
}

class Family {
public:
    explicit Family(std::string name) { result_.name = std::move(name); }

    template <typename L, typename R>
    void expect_eq(const std::string& where, const L& lhs, const R& rhs) {
        ++result_.checks;
        if (lhs == rhs)
            return;
        ++result_.failures;
        if (result_.first_failure.empty()) {
            std::ostringstream out;
            out << where << ": lhs=" << lhs << " rhs=" << rhs;
            result_.first_failure = out.str();
        }
    }

    VerifyFamily take() { return std::move(result_); }

private:
    VerifyFamily result_;
};

} // namespace

bool VerifyReport::ok() const {
    for (const VerifyFamily& f : families)
        if (f.failures != 0)
            return false;
    return true;
}

VerifyReport run_verify(const VerifyBounds& bounds, bool tamper) {
    if (bounds.k_max < 2)
        throw std::domain_error("k-max must be >= 2 (got " + std::to_string(bounds.k_max) + ")");
    if (bounds.l_max < 1)
        throw std::domain_error("l-max must be >= 1 (got " + std::to_string(bounds.l_max) + ")");
    if (bounds.n_max < 3)
        throw std::domain_error("n-max must be >= 3 (got " + std::to_string(bounds.n_max) + ")");

    Family closed_form("closed-form-vs-iterated");
    Family power_agree("matrix-power-agreement");
    Family shift("shift-law");
    Family first_two("first-two-rows-law");
    Family kstep("k-step-law");
    Family seq_last("sequence-vs-last-entry");
    Family unit_ones("unit-to-ones");
    Family unimodular("determinant-unimodular");

    for (int k = 2; k <= bounds.k_max; ++k) {
        const CompanionMatrix a = companion_matrix(k);
        std::vector<std::vector<BigInt>> rs; // rs[l-1] = R^l
        rs.reserve(static_cast<std::size_t>(bounds.l_max));
        rs.emplace_back(static_cast<std::size_t>(k), 1);
        for (std::int64_t l = 2; l <= bounds.l_max; ++l)
            rs.push_back(a.apply(rs.back()));

        for (std::int64_t l = 1; l <= bounds.l_max; ++l) {
            const std::vector<BigInt>& iterated = rs[static_cast<std::size_t>(l - 1)];
            std::vector<BigInt> closed = r_vector_closed_form(k, l).entries;
            if (tamper && k == 2 && l == 1)
                closed[0] += 1; // testing hook: force one failure
            const std::string where = "(k=" + std::to_string(k) + ",l=" + std::to_string(l) + ")";
            closed_form.expect_eq(where, vec_str(iterated), vec_str(closed));
            power_agree.expect_eq(where, vec_str(iterated), vec_str(r_vector_power(k, l).entries));
            seq_last.expect_eq(where, iterated.back(), kfib_term(k, l));
            if (l >= 2) {
                shift.expect_eq(where, iterated.back(),
                                rs[static_cast<std::size_t>(l - 2)][static_cast<std::size_t>(k - 2)]);
                first_two.expect_eq(where, iterated[0] - iterated[1],
                                    rs[static_cast<std::size_t>(l - 2)].back());
            }
            if (l >= k + 1) {
                BigInt sum = 0;
                for (int i = 1; i <= k; ++i)
                    sum += rs[static_cast<std::size_t>(l - i - 1)].back();
                kstep.expect_eq(where, iterated.back(), sum);
            }
        }

        std::vector<BigInt> e1(static_cast<std::size_t>(k), 0);
        e1[0] = 1;
        for (int step = 0; step < k - 1; ++step)
            e1 = a.apply(e1);
        unit_ones.expect_eq("(k=" + std::to_string(k) + ")", vec_str(e1),
                            vec_str(std::vector<BigInt>(static_cast<std::size_t>(k), 1)));
        unimodular.expect_eq("(k=" + std::to_string(k) + ")",
                             boost::multiprecision::abs(a.determinant()), BigInt(1));
    }

    Family two_routes("exact-vs-proof-form");
    for (int k = 2; k <= bounds.k_max; ++k)
        for (int n = k + 1; n <= bounds.n_max; ++n)
            two_routes.expect_eq("(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")",
                                    rat_str(exact_probability(k, n).value),
                                    rat_str(exact_probability_proof_form(k, n).value));

    Family triangle("triangle-fibonacci");
    {
        BigInt product = 1, fa = 1, fb = 1; // F_1, F_2
        product *= fa;
        product *= fb;
        for (int n = 3; n <= bounds.n_max; ++n) {
            const BigInt next = fa + fb;
            fa = fb;
            fb = next;
            product *= next;
            triangle.expect_eq("(n=" + std::to_string(n) + ")",
                               rat_str(exact_probability(2, n).value), rat_str(BigRat(1, product)));
        }
    }

    Family boundary("factorial-boundary");
    for (int k = 2; k <= bounds.k_max; ++k) {
        BigInt fact = 1;
        for (int i = 2; i <= k; ++i)
            fact *= i;
        boundary.expect_eq("(k=" + std::to_string(k) + ")",
                           rat_str(exact_probability(k, k + 1).value), rat_str(BigRat(1, fact)));
    }

    VerifyReport report;
    for (Family* f : {&closed_form, &power_agree, &shift, &first_two, &kstep, &seq_last,
                      &unit_ones, &unimodular, &two_routes, &triangle, &boundary})
        report.families.push_back(f->take());
    return report;
}

} // namespace sticks
