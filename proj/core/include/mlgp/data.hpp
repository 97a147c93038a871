#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "mlgp/errors.hpp"

namespace mlgp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// One data source: n subjects by d_s features.
struct ModalityMatrix {
    std::string modality_id;
    Matrix values;

    Eigen::Index n() const { return values.rows(); }
    Eigen::Index d() const { return values.cols(); }
};

/// 1-of-m coded labels. Class names map to columns in first-appearance order.
class LabelSet {
public:
    LabelSet() = default;
    LabelSet(std::vector<int> class_index, int m, std::vector<std::string> class_names = {});

    int n() const { return static_cast<int>(class_index_.size()); }
    int m() const { return m_; }
    int class_of(int subject) const { return class_index_[subject]; }
    const std::vector<int>& class_indices() const { return class_index_; }
    const std::vector<std::string>& class_names() const { return class_names_; }

    Matrix onehot() const;
    std::vector<int> class_counts() const;

    /// rows restricted to the given subjects, same class set
    LabelSet subset(const std::vector<int>& subjects) const;

private:
    std::vector<int> class_index_;
    std::vector<std::string> class_names_;
    int m_ = 0;
};

struct FoldAssignment {
    std::vector<int> fold_index; // per subject, in [0, k)
    int k = 0;

    std::vector<int> train_subjects(int fold) const;
    std::vector<int> test_subjects(int fold) const;
};

/// Column statistics of stage-2 standardization, fit on training rows.
struct NormalizationStats {
    Vector mean;
    Vector scale; // 1/sd, zero for constant columns
};

struct Dataset {
    std::vector<ModalityMatrix> modalities;
    LabelSet labels;

    int n() const { return labels.n(); }
    int q() const { return static_cast<int>(modalities.size()); }
};

/// Row-normalize (unit Euclidean norm per subject), then fit column statistics.
NormalizationStats fit_normalization(const ModalityMatrix& X);

/// Row-normalize, then standardize columns with the given statistics.
ModalityMatrix apply_normalization(const ModalityMatrix& X, const NormalizationStats& stats);

/// Both stages with statistics from X itself. Requires n >= 2 and no zero-norm row.
ModalityMatrix normalize_features(const ModalityMatrix& X);

/// Stratified fold assignment, deterministic given seed.
FoldAssignment make_folds(const LabelSet& labels, int k, std::uint64_t seed);

struct SyntheticOptions {
    // weight prior used for generation; mean shape/rate = strong signal when rate is small
    double weight_shape = 2.0;
    double weight_rate = 2.0;
    bool dirichlet_weights = false; // draw simplex weights with alpha ~ Exp(1) instead
};

struct SyntheticDataset {
    Dataset data;              // normalized modalities
    Matrix theta_true;         // m x q log-weights
    Vector f_true;             // m*n latent vector, class blocks concatenated
    double alpha_true = 1.0;   // Dirichlet variant only
};

/// Draw a dataset from the model's own prior: theta from the weight prior,
/// f_c ~ N(0, K_c), labels from the softmax probabilities.
SyntheticDataset generate_synthetic(int n, int m, int q, int d, std::uint64_t seed,
                                    const SyntheticOptions& opts = {});

/// Load modalities + labels listed in a JSON manifest (paths relative to it).
Dataset load_dataset(const std::filesystem::path& manifest_path);

/// Write modality CSVs, labels CSV and a manifest into a directory.
void save_dataset(const Dataset& data, const std::filesystem::path& dir);

} // namespace mlgp
