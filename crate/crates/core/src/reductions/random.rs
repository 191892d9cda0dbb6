use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ReductionError;
use crate::model::Instance;

/// Each topic draws an audience size uniformly from `[audience_min,
/// audience_max]` and then that many distinct users.
pub fn gen_random(
    n_users: usize,
    n_topics: usize,
    audience_min: usize,
    audience_max: usize,
    seed: u64,
) -> Result<Instance, ReductionError> {
    if audience_min > audience_max || audience_max > n_users {
        return Err(ReductionError::AudienceRange {
            min: audience_min,
            max: audience_max,
            n_users,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let audiences = (0..n_topics)
        .map(|_| {
            let size = rng.gen_range(audience_min..=audience_max);
            index::sample(&mut rng, n_users, size).into_vec()
        })
        .collect();
    Ok(Instance::new(n_users, audiences)?)
}
