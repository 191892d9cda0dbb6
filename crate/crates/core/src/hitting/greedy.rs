use super::{HsError, HsInstance, HsSolution};

/// Scans sets in index order and takes every element of each set not yet hit.
///
/// Each taken set is disjoint from the others taken, so an optimum needs one
/// element per taken set and the cost is at most `max_set_size * OPT`.
pub fn hs_greedy_setwise(instance: &HsInstance) -> Result<HsSolution, HsError> {
    instance.check_feasible()?;
    let mut taken = vec![false; instance.n_elements()];
    let mut chosen = Vec::new();
    for set in instance.sets() {
        if set.iter().any(|&e| taken[e]) {
            continue;
        }
        for &e in set {
            taken[e] = true;
            chosen.push(e);
        }
    }
    Ok(HsSolution::new(chosen, false))
}

/// Repeatedly takes the element hitting the most unhit sets, lowest id on ties.
pub fn hs_greedy_frequency(instance: &HsInstance) -> Result<HsSolution, HsError> {
    instance.check_feasible()?;
    let incidence = instance.incidence();
    let mut hit = vec![false; instance.sets().len()];
    let mut score: Vec<usize> = incidence.iter().map(Vec::len).collect();
    let mut remaining = instance.sets().len();
    let mut chosen = Vec::new();
    while remaining > 0 {
        let (best, _) = score
            .iter()
            .enumerate()
            .max_by(|(i, a), (j, b)| a.cmp(b).then(j.cmp(i)))
            .expect("unhit sets have elements");
        chosen.push(best);
        for &s in &incidence[best] {
            if !hit[s] {
                hit[s] = true;
                remaining -= 1;
                for &e in &instance.sets()[s] {
                    score[e] -= 1;
                }
            }
        }
    }
    Ok(HsSolution::new(chosen, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(n: usize, sets: &[&[usize]]) -> HsInstance {
        HsInstance::new(n, sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    #[test]
    fn setwise_triangle() {
        let inst = hs(4, &[&[1, 2], &[2, 3], &[1, 3]]);
        let sol = hs_greedy_setwise(&inst).unwrap();
        assert_eq!(sol.chosen, vec![1, 2]);
        assert!(inst.is_hitting_set(&sol.chosen));
    }

    #[test]
    fn setwise_single_set_takes_everything() {
        let sol = hs_greedy_setwise(&hs(3, &[&[1, 2]])).unwrap();
        assert_eq!(sol.cost(), 2);
    }

    #[test]
    fn setwise_disjoint_singletons() {
        let sol = hs_greedy_setwise(&hs(4, &[&[1], &[2], &[3]])).unwrap();
        assert_eq!(sol.chosen, vec![1, 2, 3]);
    }

    #[test]
    fn frequency_prefers_shared_element() {
        assert_eq!(
            hs_greedy_frequency(&hs(4, &[&[1, 2], &[1, 3]]))
                .unwrap()
                .chosen,
            vec![1]
        );
        assert_eq!(
            hs_greedy_frequency(&hs(3, &[&[1], &[2]])).unwrap().chosen,
            vec![1, 2]
        );
    }

    #[test]
    fn frequency_ties_take_lowest_id() {
        assert_eq!(
            hs_greedy_frequency(&hs(4, &[&[2, 3]])).unwrap().chosen,
            vec![2]
        );
    }

    #[test]
    fn empty_set_is_infeasible() {
        let inst = hs(2, &[&[0], &[]]);
        assert_eq!(hs_greedy_setwise(&inst), Err(HsError::EmptySet(1)));
        assert_eq!(hs_greedy_frequency(&inst), Err(HsError::EmptySet(1)));
    }

    #[test]
    fn no_sets_no_elements() {
        let inst = hs(3, &[]);
        assert_eq!(hs_greedy_setwise(&inst).unwrap().cost(), 0);
        assert_eq!(hs_greedy_frequency(&inst).unwrap().cost(), 0);
    }
}
