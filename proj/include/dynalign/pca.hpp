#ifndef DYNALIGN_PCA_HPP
#define DYNALIGN_PCA_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "dynalign/core.hpp"
#include "dynalign/graphlets.hpp"

namespace dynalign {

namespace detail {

// Cyclic Jacobi eigendecomposition of a symmetric matrix. Deterministic sweep
// order; adequate for the desk-scale matrices produced here (a few hundred
// rows). Returns eigenvalues descending with matching eigenvectors as rows.
inline void jacobi_eigen(std::vector<std::vector<double>> a, std::vector<double>& eigenvalues,
                         std::vector<std::vector<double>>& eigenvectors) {
    const std::size_t n = a.size();
    eigenvectors.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) eigenvectors[i][i] = 1.0;
    if (n == 0) {
        eigenvalues.clear();
        return;
    }

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-24) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vpk = eigenvectors[p][k], vqk = eigenvectors[q][k];
                    eigenvectors[p][k] = c * vpk - s * vqk;
                    eigenvectors[q][k] = s * vpk + c * vqk;
                }
            }
        }
    }

    eigenvalues.resize(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        eigenvalues[i] = a[i][i];
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return eigenvalues[x] > eigenvalues[y]; });
    std::vector<double> sorted_values(n);
    std::vector<std::vector<double>> sorted_vectors(n);
    for (std::size_t i = 0; i < n; ++i) {
        sorted_values[i] = eigenvalues[order[i]];
        sorted_vectors[i] = std::move(eigenvectors[order[i]]);
    }
    eigenvalues = std::move(sorted_values);
    eigenvectors = std::move(sorted_vectors);
}

}  // namespace detail

// PCA-reduced signatures: the smallest component prefix explaining at least
// the requested share of variance (99% by default).
struct ReducedSignatures {
    std::vector<std::vector<double>> rows;   // one k-vector per input row
    std::size_t components = 0;              // k
    std::vector<std::vector<double>> basis;  // k rows of input-space directions
    std::vector<double> explained_variance;  // per retained component
    bool zero_variance = false;              // all inputs identical
};

inline ReducedSignatures reduce(const std::vector<SignatureRow>& rows, double variance_target = 0.99) {
    const std::size_t n = rows.size();
    if (n < 2) throw DataError("PCA needs at least 2 vectors");
    const std::size_t dim = rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != dim) throw DataError("signature rows differ in dimension");
    }

    std::vector<double> mean(dim, 0.0);
    for (const auto& r : rows)
        for (std::size_t j = 0; j < dim; ++j) mean[j] += r[j];
    for (double& m : mean) m /= static_cast<double>(n);

    std::vector<std::vector<double>> centered(n, std::vector<double>(dim));
    double total_sq = 0;
    double max_abs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            centered[i][j] = rows[i][j] - mean[j];
            total_sq += centered[i][j] * centered[i][j];
            max_abs = std::max(max_abs, std::abs(rows[i][j]));
        }
    }

    ReducedSignatures out;
    if (total_sq <= 1e-18 * std::max(1.0, max_abs * max_abs)) {
        out.zero_variance = true;
        out.components = 1;
        out.rows.assign(n, std::vector<double>(1, 0.0));
        out.basis.assign(1, std::vector<double>(dim, 0.0));
        out.explained_variance.assign(1, 0.0);
        return out;
    }

    const double scale = 1.0 / static_cast<double>(n - 1);
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;
    std::vector<std::vector<double>> basis;  // component rows in input space

    if (dim <= n) {
        std::vector<std::vector<double>> cov(dim, std::vector<double>(dim, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < dim; ++p) {
                if (centered[i][p] == 0.0) continue;
                for (std::size_t q = p; q < dim; ++q) cov[p][q] += centered[i][p] * centered[i][q];
            }
        for (std::size_t p = 0; p < dim; ++p)
            for (std::size_t q = p; q < dim; ++q) {
                cov[p][q] *= scale;
                cov[q][p] = cov[p][q];
            }
        detail::jacobi_eigen(std::move(cov), eigenvalues, eigenvectors);
        basis = std::move(eigenvectors);
    } else {
        // More dimensions than samples: eigendecompose the n-by-n Gram matrix
        // instead and map its eigenvectors back into input space.
        std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                double dot = 0;
                for (std::size_t p = 0; p < dim; ++p) dot += centered[i][p] * centered[j][p];
                gram[i][j] = dot * scale;
                gram[j][i] = gram[i][j];
            }
        detail::jacobi_eigen(std::move(gram), eigenvalues, eigenvectors);
        basis.assign(eigenvalues.size(), std::vector<double>(dim, 0.0));
        for (std::size_t c = 0; c < eigenvalues.size(); ++c) {
            if (eigenvalues[c] <= 0) continue;
            auto& direction = basis[c];
            for (std::size_t i = 0; i < n; ++i) {
                double w = eigenvectors[c][i];
                if (w == 0.0) continue;
                for (std::size_t p = 0; p < dim; ++p) direction[p] += w * centered[i][p];
            }
            double norm = std::sqrt(std::inner_product(direction.begin(), direction.end(),
                                                       direction.begin(), 0.0));
            if (norm > 0) {
                for (double& x : direction) x /= norm;
            }
        }
    }

    double total_variance = 0;
    for (double v : eigenvalues) total_variance += std::max(v, 0.0);
    double cumulative = 0;
    std::size_t k = 0;
    while (k < eigenvalues.size() && cumulative < variance_target * total_variance) {
        cumulative += std::max(eigenvalues[k], 0.0);
        ++k;
    }
    k = std::max<std::size_t>(k, 1);

    out.components = k;
    out.basis.assign(basis.begin(), basis.begin() + k);
    out.explained_variance.assign(eigenvalues.begin(), eigenvalues.begin() + k);

    // Deterministic sign: the largest-magnitude coordinate of each component
    // points in the positive direction.
    for (auto& component : out.basis) {
        std::size_t arg = 0;
        for (std::size_t j = 1; j < component.size(); ++j)
            if (std::abs(component[j]) > std::abs(component[arg])) arg = j;
        if (component[arg] < 0) {
            for (double& x : component) x = -x;
        }
    }

    out.rows.assign(n, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < k; ++c) {
            double dot = 0;
            for (std::size_t p = 0; p < dim; ++p) dot += centered[i][p] * out.basis[c][p];
            out.rows[i][c] = dot;
        }
    return out;
}

inline ReducedSignatures reduce(const SignatureMatrix& sig, double variance_target = 0.99) {
    return reduce(sig.rows, variance_target);
}

}  // namespace dynalign

#endif  // DYNALIGN_PCA_HPP
