#include "tolspace/metric.hpp"

#include "tolspace/error.hpp"

namespace tolspace {

MetricTable::MetricTable(CarrierPtr carrier, std::vector<Rational> dense)
    : carrier_(std::move(carrier)), dense_(std::move(dense)) {
    if (!carrier_) throw Error::input("metric requires a carrier");
    if (dense_.size() != carrier_->size() * carrier_->size()) {
        throw Error::input("metric table size does not match carrier");
    }
}

MetricTable MetricTable::absdiff(CarrierPtr carrier) {
    if (!carrier->numeric()) {
        throw Error::input("absdiff metric needs a numeric carrier");
    }
    const std::size_t n = carrier->size();
    std::vector<Rational> dense(n * n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            dense[i * n + j] = (carrier->value(i) - carrier->value(j)).abs();
        }
    }
    return MetricTable(std::move(carrier), std::move(dense));
}

bool operator==(const MetricTable& a, const MetricTable& b) {
    if (a.carrier_->size() != b.carrier_->size()) return false;
    for (Index i = 0; i < a.carrier_->size(); ++i) {
        if (a.carrier_->at(i).id != b.carrier_->at(i).id) return false;
    }
    return a.dense_ == b.dense_;
}

ValidationReport validate_metric(const MetricTable& m) {
    const Carrier& carrier = m.carrier();
    const std::size_t n = carrier.size();
    ValidationReport report;
    auto fail = [&](std::string condition, std::vector<Index> wit, std::string detail) {
        report.ok = false;
        Violation v;
        v.condition = std::move(condition);
        for (Index i : wit) v.witness.push_back(carrier.at(i).id);
        v.detail = std::move(detail);
        report.violations.push_back(std::move(v));
    };

    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            const Rational& d = m.distance(i, j);
            if (d.sign() < 0) {
                fail("nonnegativity", {i, j},
                     "d(" + carrier.at(i).id + ", " + carrier.at(j).id + ") = " + d.str());
                goto nonneg_done;
            }
        }
    }
nonneg_done:
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            bool zero = m.distance(i, j).is_zero();
            if (zero != (i == j)) {
                fail("identity", {i, j},
                     "d(" + carrier.at(i).id + ", " + carrier.at(j).id + ") = " +
                         m.distance(i, j).str());
                goto identity_done;
            }
        }
    }
identity_done:
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            if (m.distance(i, j) != m.distance(j, i)) {
                fail("symmetry", {i, j},
                     "d(" + carrier.at(i).id + ", " + carrier.at(j).id + ") = " +
                         m.distance(i, j).str() + " but d(" + carrier.at(j).id + ", " +
                         carrier.at(i).id + ") = " + m.distance(j, i).str());
                goto symmetry_done;
            }
        }
    }
symmetry_done:
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            for (Index k = 0; k < n; ++k) {
                if (m.distance(i, k) > m.distance(i, j) + m.distance(j, k)) {
                    fail("triangle", {i, j, k},
                         "d(" + carrier.at(i).id + ", " + carrier.at(k).id + ") = " +
                             m.distance(i, k).str() + " exceeds d(" + carrier.at(i).id + ", " +
                             carrier.at(j).id + ") + d(" + carrier.at(j).id + ", " +
                             carrier.at(k).id + ") = " +
                             (m.distance(i, j) + m.distance(j, k)).str());
                    goto triangle_done;
                }
            }
        }
    }
triangle_done:
    return report;
}

Class ball(const MetricTable& m, Index center, const Rational& radius, int depth) {
    if (center >= m.carrier().size()) throw Error::input("position index out of range");
    if (radius.sign() <= 0) throw Error::input("ball radius must be positive");
    if (depth < 0) throw Error::input("ball depth must be nonnegative");
    Class out(m.carrier().size());
    for (int i = 0; i <= depth; ++i) {
        Rational threshold = radius - Rational::pow2(-i);
        for (Index x = 0; x < m.carrier().size(); ++x) {
            if (m.distance(center, x) < threshold) out.set(x);
        }
    }
    return out;
}

Continuum continuum_from_metric(const MetricTable& m, int levels) {
    ValidationReport report = validate_metric(m);
    if (!report.ok) {
        throw Error::input("metric violates the " + report.violations.front().condition +
                           " axiom: " + report.violations.front().detail);
    }
    if (levels < 1) throw Error::input("metric continuum needs L >= 1");
    const std::size_t n = m.carrier().size();
    std::vector<Relation> rels;
    rels.push_back(Relation::full(n));
    for (int lvl = 1; lvl <= levels; ++lvl) {
        Rational threshold = Rational::pow2(-lvl);
        rels.push_back(Relation::from_predicate(
            n, [&](Index i, Index j) { return m.distance(i, j) < threshold; }));
    }
    return Continuum(m.carrier_ptr(), std::move(rels));
}

Continuum literal_metric_continuum(const MetricTable& m, const Rational& e, int levels) {
    if (levels < 1) throw Error::input("metric continuum needs L >= 1");
    const std::size_t n = m.carrier().size();
    std::vector<Relation> rels;
    for (int lvl = 0; lvl <= levels; ++lvl) {
        Rational near = e - Rational::pow2(-lvl);
        Rational far = Rational::pow2(lvl);
        rels.push_back(Relation::from_predicate(n, [&](Index i, Index j) {
            return m.distance(i, j) < near || m.distance(i, j) > far;
        }));
    }
    return Continuum(m.carrier_ptr(), std::move(rels));
}

} // namespace tolspace
