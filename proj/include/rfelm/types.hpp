#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace rfelm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Activation sigma(.) applied entrywise to W*X. Poly2 carries its
/// coefficients; every other tag is parameter-free.
struct Activation {
    enum class Tag { Linear, ReLU, Abs, Erf, Step, Sign, Cos, Sin, Poly2 };

    Tag tag = Tag::ReLU;
    double z2 = 0.0, z1 = 0.0, z0 = 0.0;  // Poly2: z2*t^2 + z1*t + z0

    static Activation linear() { return {Tag::Linear}; }
    static Activation relu() { return {Tag::ReLU}; }
    static Activation abs() { return {Tag::Abs}; }
    static Activation erf() { return {Tag::Erf}; }
    static Activation step() { return {Tag::Step}; }
    static Activation sign() { return {Tag::Sign}; }
    static Activation cos() { return {Tag::Cos}; }
    static Activation sin() { return {Tag::Sin}; }
    static Activation poly2(double z2, double z1, double z0) {
        if (!std::isfinite(z2) || !std::isfinite(z1) || !std::isfinite(z0))
            throw std::invalid_argument("poly2 coefficients must be finite");
        return {Tag::Poly2, z2, z1, z0};
    }

    double operator()(double t) const {
        switch (tag) {
            case Tag::Linear: return t;
            case Tag::ReLU: return t > 0.0 ? t : 0.0;
            case Tag::Abs: return std::abs(t);
            case Tag::Erf: return std::erf(t);
            case Tag::Step: return t > 0.0 ? 1.0 : 0.0;
            case Tag::Sign: return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0);
            case Tag::Cos: return std::cos(t);
            case Tag::Sin: return std::sin(t);
            case Tag::Poly2: return (z2 * t + z1) * t + z0;
        }
        return 0.0;
    }

    // Closed-form Gaussian-weight kernel exists for every tag; the
    // generic-moment kernel exists only for Poly2.
    bool has_moment_kernel() const { return tag == Tag::Poly2; }

    std::string name() const {
        switch (tag) {
            case Tag::Linear: return "linear";
            case Tag::ReLU: return "relu";
            case Tag::Abs: return "abs";
            case Tag::Erf: return "erf";
            case Tag::Step: return "step";
            case Tag::Sign: return "sign";
            case Tag::Cos: return "cos";
            case Tag::Sin: return "sin";
            case Tag::Poly2: return "poly2";
        }
        return "?";
    }
};

/// Distribution of the i.i.d. entries of W, with the moments m2, m3, m4 of
/// the entry law that enter the polynomial kernel.
struct WeightLaw {
    enum class Tag { GaussianStd, UniformPM1, BernoulliPM1, StudentT };

    Tag tag = Tag::GaussianStd;
    double nu = 0.0;  // StudentT only
    double m2 = 1.0, m3 = 0.0, m4 = 3.0;

    static WeightLaw gaussian() { return {Tag::GaussianStd, 0.0, 1.0, 0.0, 3.0}; }
    static WeightLaw uniform_pm1() { return {Tag::UniformPM1, 0.0, 1.0 / 3.0, 0.0, 1.0 / 5.0}; }
    static WeightLaw bernoulli_pm1() { return {Tag::BernoulliPM1, 0.0, 1.0, 0.0, 1.0}; }
    // Rescaled by sqrt((nu-2)/nu) to unit variance; m4 then equals 3(nu-2)/(nu-4).
    static WeightLaw student_t(double nu) {
        if (!(nu > 4.0))
            throw std::invalid_argument("student_t requires nu > 4 (m4 undefined otherwise)");
        return {Tag::StudentT, nu, 1.0, 0.0, 3.0 * (nu - 2.0) / (nu - 4.0)};
    }

    bool valid_moments() const { return m2 > 0.0 && m4 >= m2 * m2; }

    std::string name() const {
        switch (tag) {
            case Tag::GaussianStd: return "gaussian";
            case Tag::UniformPM1: return "uniform_pm1";
            case Tag::BernoulliPM1: return "bernoulli_pm1";
            case Tag::StudentT: return "student_t";
        }
        return "?";
    }
};

/// Paired input / target matrices, optional test split, and the
/// preprocessing record left behind by center_scale.
struct Dataset {
    Matrix X;  // p x T
    Matrix Y;  // d x T
    std::optional<Matrix> Xhat;  // p x That
    std::optional<Matrix> Yhat;  // d x That

    enum class Provenance { Synthetic, Ingested };
    Provenance provenance = Provenance::Synthetic;

    // center_scale record: x -> (x - shift) / scale applied to X and Xhat.
    std::optional<Vector> shift;
    std::optional<double> scale;

    int p() const { return static_cast<int>(X.rows()); }
    int T() const { return static_cast<int>(X.cols()); }
    int d() const { return static_cast<int>(Y.rows()); }
    int That() const { return Xhat ? static_cast<int>(Xhat->cols()) : 0; }
    bool has_test() const { return Xhat.has_value() && Yhat.has_value(); }

    void validate() const {
        if (X.cols() != Y.cols()) throw std::invalid_argument("X and Y column counts differ");
        if (has_test()) {
            if (Xhat->rows() != X.rows()) throw std::invalid_argument("Xhat row count differs from X");
            if (Xhat->cols() != Yhat->cols()) throw std::invalid_argument("Xhat and Yhat column counts differ");
            if (Yhat->rows() != Y.rows()) throw std::invalid_argument("Yhat row count differs from Y");
        }
        if (!X.allFinite() || !Y.allFinite()) throw std::invalid_argument("dataset contains non-finite values");
    }
};

}  // namespace rfelm
