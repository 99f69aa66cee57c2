#include "fif/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fif/shape.hpp"

namespace fif {

namespace {

int direction_of(ShapeClass shape) {
    switch (shape) {
    case ShapeClass::MonotoneIncreasing:
    case ShapeClass::ConvexMonotoneIncreasing:
        return 1;
    case ShapeClass::MonotoneDecreasing:
        return -1;
    default:
        return 0;
    }
}

void check_ranges(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() < 2 || x.size() != y.size())
        throw std::invalid_argument("plan_segments: need N >= 2 with matching y");
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (!(x[i] < x[i + 1]))
            throw std::invalid_argument("plan_segments: knots must be strictly increasing");
}

bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

} // namespace

SegmentPlan plan_segments(const std::vector<double>& x, const std::vector<double>& y,
                          const std::vector<SegmentSpec>* annotations) {
    check_ranges(x, y);
    const std::size_t n = x.size();

    SegmentPlan plan;
    if (annotations) {
        if (annotations->empty())
            throw std::invalid_argument("plan_segments: empty annotation list");
        std::size_t expect = 0;
        for (const SegmentSpec& spec : *annotations) {
            if (spec.first != expect || spec.last <= spec.first || spec.last >= n)
                throw std::invalid_argument("plan_segments: annotations must tile the knots");
            Segment seg;
            seg.first = spec.first;
            seg.last = spec.last;
            seg.shape = spec.shape;
            plan.segments.push_back(seg);
            expect = spec.last;
        }
        if (expect != n - 1)
            throw std::invalid_argument("plan_segments: annotations must end at the last knot");
    } else {
        // maximal runs of uniform chord-slope sign; ties form constant runs
        std::size_t start = 0;
        auto sign_at = [&](std::size_t i) {
            return y[i + 1] > y[i] ? 1 : (y[i + 1] < y[i] ? -1 : 0);
        };
        for (std::size_t i = 1; i <= n - 1; ++i) {
            if (i == n - 1 || sign_at(i) != sign_at(start)) {
                Segment seg;
                seg.first = start;
                seg.last = i;
                const int s = sign_at(start);
                seg.shape = s > 0 ? ShapeClass::MonotoneIncreasing
                                  : (s < 0 ? ShapeClass::MonotoneDecreasing
                                           : ShapeClass::Unconstrained);
                plan.segments.push_back(seg);
                start = i;
            }
        }
    }

    for (Segment& seg : plan.segments) {
        seg.constant = true;
        for (std::size_t j = seg.first; j < seg.last; ++j)
            if (y[j + 1] != y[seg.first])
                seg.constant = false;
        if (!seg.constant && seg.last == seg.first + 1) {
            seg.inserted_x = 0.5 * (x[seg.first] + x[seg.last]);
            seg.inserted_y = 0.5 * (y[seg.first] + y[seg.last]);
        }
    }

    for (std::size_t k = 0; k + 1 < plan.segments.size(); ++k) {
        const Segment& a = plan.segments[k];
        const Segment& b = plan.segments[k + 1];
        const int da = direction_of(a.shape), db = direction_of(b.shape);
        if (a.constant || b.constant || da * db < 0)
            plan.zero_slope_knots.push_back(a.last);
    }
    return plan;
}

std::vector<HermiteData> segment_hermite_data(const SegmentPlan& plan,
                                              const std::vector<double>& x,
                                              const std::vector<double>& y,
                                              const std::vector<double>& d) {
    check_ranges(x, y);
    if (d.size() != x.size())
        throw std::invalid_argument("segment_hermite_data: x/d length mismatch");

    std::vector<double> dd = d;
    for (std::size_t j : plan.zero_slope_knots) {
        if (j >= dd.size())
            throw std::invalid_argument("segment_hermite_data: zero-slope knot out of range");
        dd[j] = 0.0;
    }

    std::vector<HermiteData> out;
    out.reserve(plan.segments.size());
    for (const Segment& seg : plan.segments) {
        if (seg.last >= x.size() || seg.last <= seg.first)
            throw std::invalid_argument("segment_hermite_data: segment range out of bounds");
        std::vector<double> sx, sy, sd;
        for (std::size_t j = seg.first; j <= seg.last; ++j) {
            sx.push_back(x[j]);
            sy.push_back(y[j]);
            sd.push_back(seg.constant ? 0.0 : dd[j]);
        }
        if (seg.inserted_x) {
            const double chord = (y[seg.last] - y[seg.first]) / (x[seg.last] - x[seg.first]);
            auto it = std::upper_bound(sx.begin(), sx.end(), *seg.inserted_x);
            const auto pos = std::size_t(it - sx.begin());
            sx.insert(sx.begin() + long(pos), *seg.inserted_x);
            sy.insert(sy.begin() + long(pos), *seg.inserted_y);
            sd.insert(sd.begin() + long(pos), chord);
        }
        out.emplace_back(sx, sy, sd);
    }
    return out;
}

PiecewiseFif::PiecewiseFif(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty())
        throw std::invalid_argument("PiecewiseFif: no pieces");
}

std::size_t PiecewiseFif::piece_index(double x) const {
    if (x < x_front() || x > x_back())
        throw std::domain_error("PiecewiseFif: query outside the data span");
    std::size_t lo = 0, hi = pieces_.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (x <= pieces_[mid].x_right)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

EvalResult PiecewiseFif::eval_at(double x, const EvalSettings& settings) const {
    const Piece& p = pieces_[piece_index(x)];
    if (p.constant)
        return EvalResult{p.constant_value, 0.0, 0};
    return fif::eval_at(*p.fif, x, settings);
}

EvalResult PiecewiseFif::eval_derivative_at(double x, const EvalSettings& settings) const {
    const Piece& p = pieces_[piece_index(x)];
    if (p.constant)
        return EvalResult{0.0, 0.0, 0};
    return fif::eval_derivative_at(*p.fif, x, settings);
}

CurveSample PiecewiseFif::sample(int depth, std::size_t max_points) const {
    CurveSample out;
    out.depth = depth;
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        const Piece& p = pieces_[k];
        CurveSample part;
        if (p.constant) {
            part.points = {{p.x_left, p.constant_value, 0.0},
                           {p.x_right, p.constant_value, 0.0}};
        } else {
            if (out.points.size() >= max_points)
                throw std::length_error("PiecewiseFif::sample: point budget exhausted");
            part = sample_attractor(*p.fif, depth, max_points - out.points.size());
            out.exact = out.exact && part.exact;
        }
        const std::size_t skip = k == 0 ? 0 : 1; // joint emitted by the left piece
        out.points.insert(out.points.end(), part.points.begin() + long(skip),
                          part.points.end());
        if (out.points.size() > max_points)
            throw std::length_error("PiecewiseFif::sample: point budget exhausted");
    }
    return out;
}

PiecewiseFif assemble_piecewise(const SegmentPlan& plan,
                                const std::vector<HermiteData>& segment_data,
                                const std::vector<FifParameters>* params, double t) {
    if (segment_data.size() != plan.segments.size() || segment_data.empty())
        throw std::invalid_argument("assemble_piecewise: segment data count mismatch");
    if (params && params->size() != segment_data.size())
        throw std::invalid_argument("assemble_piecewise: parameter count mismatch");

    constexpr double kJointTol = 1e-12;
    for (std::size_t k = 0; k + 1 < segment_data.size(); ++k) {
        const HermiteData& a = segment_data[k];
        const HermiteData& b = segment_data[k + 1];
        if (!close(a.x_back(), b.x_front(), kJointTol) ||
            !close(a.y().back(), b.y().front(), kJointTol) ||
            !close(a.d().back(), b.d().front(), kJointTol))
            throw std::invalid_argument(
                "assemble_piecewise: joint mismatch between segments " +
                std::to_string(k) + " and " + std::to_string(k + 1));
    }

    std::vector<PiecewiseFif::Piece> pieces;
    pieces.reserve(segment_data.size());
    for (std::size_t k = 0; k < segment_data.size(); ++k) {
        const HermiteData& data = segment_data[k];
        PiecewiseFif::Piece piece;
        piece.segment = plan.segments[k];
        piece.x_left = data.x_front();
        piece.x_right = data.x_back();
        if (plan.segments[k].constant) {
            for (double yj : data.y())
                if (yj != data.y().front())
                    throw std::invalid_argument(
                        "assemble_piecewise: constant segment with varying values");
            for (double dj : data.d())
                if (std::abs(dj) > kJointTol)
                    throw std::invalid_argument(
                        "assemble_piecewise: constant segment with nonzero slope");
            piece.constant = true;
            piece.constant_value = data.y().front();
        } else if (params) {
            const auto report =
                validate_shape_parameters(data, (*params)[k], plan.segments[k].shape);
            if (!report.ok())
                throw std::invalid_argument("assemble_piecewise: segment " +
                                            std::to_string(k) + ": " +
                                            report.to_string());
            piece.fif = build_fif(data, (*params)[k]);
        } else {
            piece.fif =
                build_fif(data, select_parameters(data, plan.segments[k].shape, t));
        }
        pieces.push_back(std::move(piece));
    }
    return PiecewiseFif(std::move(pieces));
}

} // namespace fif
