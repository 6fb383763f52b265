#pragma once

#include <span>
#include <string>

namespace ebcle {

enum class TailDirection {
    a_greater,
    b_greater,
};

const char* to_string(TailDirection d);
TailDirection tail_direction_from_string(const std::string& s);

struct TTestResult {
    double t_stat = 0.0;
    int df = 0;
    double p_one_tailed = 1.0;
    bool reject_null = false; // p < 0.05
    double mean_a = 0.0, mean_b = 0.0;
    double var_a = 0.0, var_b = 0.0; // sample variances (n-1)
};

// Paired one-tailed t-test on matched samples. t = mean(d) / (sd(d)/sqrt(n))
// with sample sd; p from the Student-t CDF in the requested direction.
// Zero-variance differences are a degenerate error, n < 2 a domain error.
TTestResult paired_t_one_tailed(std::span<const double> a, std::span<const double> b,
                                TailDirection direction);

struct SWTestResult {
    double w_stat = 0.0;
    double p_value = 0.0;
};

// Shapiro-Wilk normality test, Royston's AS R94 approximation. Valid for
// 3 <= n <= 5000; constant samples are degenerate.
SWTestResult shapiro_wilk(std::span<const double> x);

struct Table3Row {
    double mean_ebcle = 0.0, mean_baseline = 0.0;
    double var_ebcle = 0.0, var_baseline = 0.0;
    double p_value = 1.0;
    bool significant = false; // p < 0.05
    double t_stat = 0.0;
    int df = 0;
};

// One comparison row in the published layout: paired one-tailed test of the
// assumption that the deeper baseline scores higher than the EBCLE model.
Table3Row table3_row(std::span<const double> ebcle_runs,
                     std::span<const double> baseline_runs);

// Numeric building blocks, exposed for direct verification.
double student_t_cdf(double t, int df);
double regularized_incomplete_beta(double a, double b, double x);
double normal_cdf(double x);
double normal_quantile(double p);

} // namespace ebcle
