#include "limitroots/form.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace limitroots {

namespace {

constexpr double kEntryTol = 1e-12;

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
    std::ostringstream os;
    os << "diagram line " << line_no << ": " << msg;
    throw InputError(os.str());
}

// Gram entry admissibility: g <= -1, or g = -cos(pi/k) for an integer k >= 2.
bool admissible_off_diagonal(double g) {
    if (!std::isfinite(g)) return false;
    if (g <= -1.0) return true;
    if (std::abs(g) <= kEntryTol) return true; // k = 2
    if (g > 0.0) return false;
    const double angle = std::acos(-g); // in (0, pi/2)
    const long k = std::lround(M_PI / angle);
    if (k < 2) return false;
    return std::abs(g + std::cos(M_PI / static_cast<double>(k))) <= kEntryTol;
}

} // namespace

CoxeterDiagram parse_diagram(std::istream& in) {
    CoxeterDiagram d;
    bool have_rank = false;
    std::set<std::pair<int, int>> seen;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string directive;
        if (!(ls >> directive)) continue; // blank line

        if (directive == "rank") {
            if (have_rank) parse_fail(line_no, "duplicate rank directive");
            if (!(ls >> d.rank) || d.rank < 1) parse_fail(line_no, "rank must be a positive integer");
            have_rank = true;
        } else if (directive == "edge") {
            if (!have_rank) parse_fail(line_no, "edge before rank");
            int i = 0, j = 0;
            std::string label;
            if (!(ls >> i >> j >> label)) parse_fail(line_no, "expected: edge <i> <j> <m|inf>");
            if (i < 1 || i > d.rank || j < 1 || j > d.rank || i == j)
                parse_fail(line_no, "edge indices out of range");
            DiagramEdge e;
            e.i = std::min(i, j) - 1;
            e.j = std::max(i, j) - 1;
            if (!seen.insert({e.i, e.j}).second) parse_fail(line_no, "duplicate edge");
            if (label == "inf") {
                e.label = kInfiniteLabel;
                e.weight = -1.0;
                if (ls >> e.weight) {
                    if (!(e.weight <= -1.0))
                        parse_fail(line_no, "infinite-edge weight must be <= -1");
                }
            } else {
                try {
                    e.label = std::stoi(label);
                } catch (...) {
                    parse_fail(line_no, "bad edge label '" + label + "'");
                }
                if (e.label < 2) parse_fail(line_no, "finite edge label must be >= 2");
            }
            std::string extra;
            if (ls >> extra) parse_fail(line_no, "trailing tokens");
            d.edges.push_back(e);
        } else {
            parse_fail(line_no, "unknown directive '" + directive + "'");
        }
    }
    if (!have_rank) throw InputError("diagram: missing rank directive");
    return d;
}

CoxeterDiagram parse_diagram_text(const std::string& text) {
    std::istringstream in(text);
    return parse_diagram(in);
}

CoxeterDiagram parse_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open diagram file: " + path);
    return parse_diagram(in);
}

GramMatrix GramMatrix::from_diagram(const CoxeterDiagram& d) {
    if (d.rank < 1) throw InputError("diagram rank must be positive");
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d.rank, d.rank);
    for (const auto& e : d.edges) {
        double entry = 0.0;
        if (e.label == kInfiniteLabel) {
            if (!(e.weight <= -1.0))
                throw InputError("infinite-edge weight must be <= -1");
            entry = e.weight;
        } else if (e.label == 2) {
            entry = 0.0;
        } else {
            entry = -std::cos(M_PI / static_cast<double>(e.label));
        }
        m(e.i, e.j) = entry;
        m(e.j, e.i) = entry;
    }
    return GramMatrix(std::move(m));
}

GramMatrix::GramMatrix(Eigen::MatrixXd entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1)
        throw InputError("gram matrix must be square and nonempty");
    const int n = static_cast<int>(m_.rows());
    for (int i = 0; i < n; ++i) {
        if (m_(i, i) != 1.0) throw InputError("gram diagonal entries must be 1");
        for (int j = i + 1; j < n; ++j) {
            if (m_(i, j) != m_(j, i)) throw InputError("gram matrix must be symmetric");
            if (!admissible_off_diagonal(m_(i, j))) {
                std::ostringstream os;
                os << "inadmissible gram entry " << m_(i, j) << " at (" << i + 1 << "," << j + 1
                   << "): must be <= -1 or -cos(pi/k)";
                throw InputError(os.str());
            }
        }
    }
}

double GramMatrix::evaluate(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
    if (u.size() != m_.rows() || v.size() != m_.rows())
        throw InputError("evaluate: dimension mismatch");
    return u.dot(m_ * v);
}

Signature GramMatrix::signature(double tol) const {
    if (!(tol > 0.0)) throw InputError("signature: tol must be positive");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m_, Eigen::EigenvaluesOnly);
    Signature s;
    for (double ev : es.eigenvalues()) {
        if (ev > tol)
            ++s.n_plus;
        else if (ev < -tol)
            ++s.n_minus;
        else
            ++s.n_zero;
    }
    return s;
}

VectorKind GramMatrix::vector_kind(const Eigen::VectorXd& v, double tol) const {
    const double qv = q(v);
    if (qv > tol) return VectorKind::SpaceLike;
    if (qv < -tol) return VectorKind::TimeLike;
    return VectorKind::LightLike;
}

const char* to_string(VectorKind k) {
    switch (k) {
    case VectorKind::SpaceLike: return "SpaceLike";
    case VectorKind::TimeLike: return "TimeLike";
    case VectorKind::LightLike: return "LightLike";
    }
    return "?";
}

} // namespace limitroots
