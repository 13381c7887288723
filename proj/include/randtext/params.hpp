#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace randtext {

// Parameters of the i.i.d. symbol model: an alphabet of `alphabet_size`
// letters plus one space symbol drawn with probability `space_prob`.
// Letters are equiprobable unless an explicit distribution is given.
class ModelParams {
public:
    ModelParams(std::uint32_t alphabet_size, double space_prob)
        : m_(alphabet_size), q_(space_prob) {
        validate_base();
    }

    ModelParams(std::uint32_t alphabet_size, double space_prob,
                std::vector<double> letter_probs)
        : m_(alphabet_size), q_(space_prob), letter_probs_(std::move(letter_probs)) {
        validate_base();
        const auto& p = *letter_probs_;
        if (p.size() != m_) {
            throw std::domain_error("letter_probs size must equal alphabet size");
        }
        double sum = 0.0;
        for (double v : p) {
            if (!(v > 0.0)) {
                throw std::domain_error("letter probabilities must be > 0");
            }
            sum += v;
        }
        if (std::fabs(sum - (1.0 - q_)) > 1e-12) {
            throw std::domain_error("letter probabilities must sum to 1 - space_prob");
        }
    }

    std::uint32_t alphabet_size() const { return m_; }
    double space_prob() const { return q_; }

    const std::optional<std::vector<double>>& letter_probs() const {
        return letter_probs_;
    }

    // True when every letter carries probability (1-q)/m within 1e-12.
    bool uniform() const {
        if (!letter_probs_) return true;
        const double per_letter = (1.0 - q_) / static_cast<double>(m_);
        for (double v : *letter_probs_) {
            if (std::fabs(v - per_letter) > 1e-12) return false;
        }
        return true;
    }

    bool operator==(const ModelParams& other) const {
        return m_ == other.m_ && q_ == other.q_ &&
               letter_probs_ == other.letter_probs_;
    }

private:
    void validate_base() const {
        if (m_ < 2) {
            throw std::domain_error(
                "alphabet size must be >= 2 (the rank-frequency exponent is "
                "undefined for a one-letter alphabet)");
        }
        if (!(q_ > 0.0) || !(q_ < 1.0)) {
            throw std::domain_error("space probability must lie in (0, 1)");
        }
    }

    std::uint32_t m_;
    double q_;
    std::optional<std::vector<double>> letter_probs_;
};

}  // namespace randtext
