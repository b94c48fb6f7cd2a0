#include "freedist/frame.hpp"

#include "freedist/errors.hpp"

namespace freedist {

Frame::Frame(std::vector<VectorField> distribution)
    : chart_(static_cast<int>(distribution.size())), indexer_(static_cast<int>(distribution.size()))
{
    const int l = indexer_.l();
    for (auto& v : distribution) {
        if (v.chart().l() != 0 && !(v.chart() == chart_)) throw ChartMismatch("distribution field not on the l chart");
        VectorField bound(chart_);
        bound += v;
        fields_.push_back(std::move(bound));
    }
    for (std::size_t p = 0; p < indexer_.count(); ++p) {
        auto [j, k] = indexer_.pair(p);
        fields_.push_back(-lie_bracket(fields_[j - 1], fields_[k - 1]));
    }
    (void)l;
}

PolyMatrix Frame::matrix() const
{
    PolyMatrix m(fields_.size(), std::vector<Polynomial>(chart_.dimension()));
    for (std::size_t a = 0; a < fields_.size(); ++a)
        for (const auto& [c, v] : fields_[a].coefficients()) m[a][c] = v;
    return m;
}

bool check_nondegenerate(const Frame& frame)
{
    Polynomial det = determinant_and_adjugate(frame.matrix()).determinant;
    return !det.is_zero() && det.is_constant();
}

Frame build_frame(std::vector<VectorField> distribution, const std::map<Coordinate, ExactScalar>& base_point)
{
    Frame frame(std::move(distribution));
    Polynomial det = determinant_and_adjugate(frame.matrix()).determinant;
    if (det.is_zero()) throw DegenerateFrame("frame matrix is singular");
    std::map<Coordinate, ExactScalar> point = base_point;
    for (std::size_t c = 0; c < frame.chart().dimension(); ++c) point.emplace(frame.chart().coordinate(c), ExactScalar(0));
    if (det.evaluate(point).is_zero()) throw DegenerateFrame("frame matrix is singular at the base point");
    if (!det.is_constant())
        throw UnsupportedFrame("frame determinant " + det.to_string() + " is not constant; the coframe is not polynomial");
    return frame;
}

std::vector<Polynomial> Coframe::coordinates(const VectorField& v) const
{
    std::vector<Polynomial> out;
    out.reserve(forms_.size());
    for (const auto& w : forms_) out.push_back(w.evaluate({v}));
    return out;
}

Coframe dual_coframe(const Frame& frame)
{
    auto [det, adj] = determinant_and_adjugate(frame.matrix());
    if (det.is_zero() || !det.is_constant()) throw UnsupportedFrame("frame matrix is not unimodular");
    ExactScalar inv = det.constant_value().inverse();
    // theta^b = sum_c (M^{-1})_{cb} dx^c.
    std::vector<DifferentialForm> forms;
    const Chart& chart = frame.chart();
    for (std::size_t b = 0; b < frame.size(); ++b) {
        DifferentialForm w(chart, 1);
        for (std::size_t c = 0; c < chart.dimension(); ++c)
            if (!adj[c][b].is_zero()) w.add({c}, adj[c][b] * inv);
        forms.push_back(std::move(w));
    }
    return Coframe(std::move(forms));
}

Polynomial StructureFunctions::operator()(std::size_t a, std::size_t b, std::size_t c) const
{
    if (b == c) return Polynomial();
    bool flip = b > c;
    auto it = entries_.find({a, flip ? c : b, flip ? b : c});
    if (it == entries_.end()) return Polynomial();
    return flip ? -it->second : it->second;
}

void StructureFunctions::set(std::size_t a, std::size_t b, std::size_t c, const Polynomial& value)
{
    if (b >= c) throw Error("structure function slots must satisfy b < c");
    if (value.is_zero())
        entries_.erase({a, b, c});
    else
        entries_[{a, b, c}] = value;
}

Polynomial StructureFunctions::single_pair(std::size_t a, int i, int j, int k) const
{
    auto p = indexer_.signed_index(j, k);
    if (!p) return Polynomial();
    Polynomial v = (*this)(a, single_slot(i), static_cast<std::size_t>(l()) + p->index);
    return p->sign > 0 ? v : -v;
}

Polynomial StructureFunctions::pair_pair(std::size_t a, int j, int k, int m, int n) const
{
    auto p = indexer_.signed_index(j, k);
    auto q = indexer_.signed_index(m, n);
    if (!p || !q) return Polynomial();
    Polynomial v = (*this)(a, static_cast<std::size_t>(l()) + p->index, static_cast<std::size_t>(l()) + q->index);
    return p->sign * q->sign > 0 ? v : -v;
}

StructureFunctions structure_functions(const Frame& frame, const Coframe& coframe)
{
    const int l = frame.l();
    const std::size_t n = frame.size();
    StructureFunctions f(l);
    for (std::size_t a = 0; a < n; ++a) {
        DifferentialForm dtheta = coframe[a].exterior_derivative();
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                Polynomial v = dtheta.evaluate({frame.fields()[b], frame.fields()[c]});
                if (c < static_cast<std::size_t>(l)) {
                    // Both slots single: d theta must be exactly theta^r ^ theta^s.
                    Polynomial expected;
                    if (a >= static_cast<std::size_t>(l) && a - l == frame.pairs().index(static_cast<int>(b) + 1, static_cast<int>(c) + 1))
                        expected = Polynomial(1);
                    if (v != expected)
                        throw NotFreeDistribution("d theta^" + std::to_string(a) + " has single-single coefficient " +
                                                  v.to_string() + " on slots (" + std::to_string(b) + "," +
                                                  std::to_string(c) + ")");
                    continue;
                }
                f.set(a, b, c, v);
            }
    }
    return f;
}

}  // namespace freedist
