//! Largest topic count for which the problem remains polynomially solvable
//! as a function of the number of users.

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum ThresholdError {
    #[error("threshold needs at least 16 users, got {0}")]
    TooFewUsers(u64),
    #[error("threshold needs log2(n) >= 4, got {0}")]
    LogTooSmall(f64),
}

/// `1.5 * log2log2log2 n / (log2log2 n - 1.5 * log2log2log2 n)`, from `log2 n`.
pub fn small_topic_epsilon(log2_n: f64) -> Result<f64, ThresholdError> {
    if !log2_n.is_finite() || log2_n < 4.0 {
        return Err(ThresholdError::LogTooSmall(log2_n));
    }
    let ll = log2_n.log2();
    let lll = ll.log2();
    Ok(1.5 * lll / (ll - 1.5 * lll))
}

/// `floor(log2log2 n / (1 + eps))`, taking `log2 n` so that huge user counts
/// can be expressed.
pub fn small_topic_threshold_log2(log2_n: f64) -> Result<usize, ThresholdError> {
    let eps = small_topic_epsilon(log2_n)?;
    Ok((log2_n.log2() / (1.0 + eps)).floor() as usize)
}

pub fn small_topic_threshold(n_users: u64) -> Result<usize, ThresholdError> {
    if n_users < 16 {
        return Err(ThresholdError::TooFewUsers(n_users));
    }
    small_topic_threshold_log2((n_users as f64).log2())
}
