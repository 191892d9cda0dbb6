//! Reduction rules for the parameterized question "is there a hitting set
//! with at most `k` elements?".
//!
//! - R1: a set that contains another set is dropped.
//! - R2: an element whose sets all contain some other element is dropped
//!   from every set.
//! - R3: if more than `k` sets contain a common core and are pairwise
//!   disjoint outside it, any hitting set of size `k` hits the core, so those
//!   sets are replaced by the core.
//!
//! The rules run to a fixpoint. Element ids are kept as they are.

use std::collections::BTreeSet;

use super::HsInstance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleEvent {
    SupersetRemoved { set: Vec<usize>, subset: Vec<usize> },
    ElementDominated { element: usize, by: usize },
    Sunflower { core: Vec<usize>, petals: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub instance: HsInstance,
    /// Elements that form singleton sets of the kernel; every hitting set takes them.
    pub forced: Vec<usize>,
    pub trace: Vec<RuleEvent>,
}

fn is_subset(small: &[usize], large: &[usize]) -> bool {
    if small.len() > large.len() {
        return false;
    }
    let mut it = large.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut it = b.iter().peekable();
    let mut out = Vec::new();
    for &x in a {
        while it.next_if(|&&y| y < x).is_some() {}
        if it.peek() == Some(&&x) {
            out.push(x);
        }
    }
    out
}

fn difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter()
        .copied()
        .filter(|x| b.binary_search(x).is_err())
        .collect()
}

pub fn hs_reduce_rules(instance: &HsInstance, k: usize) -> Kernel {
    let mut sets: Vec<Vec<usize>> = instance.sets().to_vec();
    let mut trace = Vec::new();
    loop {
        if remove_supersets(&mut sets, &mut trace) {
            continue;
        }
        if remove_dominated_elements(&mut sets, instance.n_elements(), &mut trace) {
            continue;
        }
        if apply_sunflower(&mut sets, k, &mut trace) {
            continue;
        }
        break;
    }
    let forced = sets
        .iter()
        .filter(|s| s.len() == 1)
        .map(|s| s[0])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Kernel {
        instance: HsInstance::new(instance.n_elements(), sets).expect("kernel keeps element ids"),
        forced,
        trace,
    }
}

/// R1. Among equal sets the first one stays.
fn remove_supersets(sets: &mut Vec<Vec<usize>>, trace: &mut Vec<RuleEvent>) -> bool {
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| (sets[i].len(), i));
    let mut keep = vec![true; sets.len()];
    let mut kept: Vec<usize> = Vec::new();
    for &i in &order {
        if let Some(&j) = kept.iter().find(|&&j| is_subset(&sets[j], &sets[i])) {
            keep[i] = false;
            trace.push(RuleEvent::SupersetRemoved {
                set: sets[i].clone(),
                subset: sets[j].clone(),
            });
        } else {
            kept.push(i);
        }
    }
    let changed = keep.iter().any(|&k| !k);
    if changed {
        let mut idx = 0;
        sets.retain(|_| {
            idx += 1;
            keep[idx - 1]
        });
    }
    changed
}

/// R2. Elements are scanned from the highest id down; the dominator is the
/// lowest id still present.
fn remove_dominated_elements(
    sets: &mut [Vec<usize>],
    n_elements: usize,
    trace: &mut Vec<RuleEvent>,
) -> bool {
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); n_elements];
    for (i, s) in sets.iter().enumerate() {
        for &e in s {
            membership[e].push(i);
        }
    }
    let mut present: Vec<bool> = membership.iter().map(|m| !m.is_empty()).collect();
    let mut removed = Vec::new();
    for x in (0..n_elements).rev() {
        if !present[x] {
            continue;
        }
        let by = (0..n_elements)
            .find(|&y| y != x && present[y] && is_subset(&membership[x], &membership[y]));
        if let Some(y) = by {
            present[x] = false;
            removed.push(x);
            trace.push(RuleEvent::ElementDominated { element: x, by: y });
        }
    }
    if removed.is_empty() {
        return false;
    }
    for s in sets.iter_mut() {
        s.retain(|e| present[*e]);
    }
    true
}

/// R3. Tries candidate cores (pairwise intersections, largest first) and
/// applies the first sunflower with more than `k` petals.
fn apply_sunflower(sets: &mut Vec<Vec<usize>>, k: usize, trace: &mut Vec<RuleEvent>) -> bool {
    let mut cores: BTreeSet<(std::cmp::Reverse<usize>, Vec<usize>)> = BTreeSet::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let c = intersect(&sets[i], &sets[j]);
            cores.insert((std::cmp::Reverse(c.len()), c));
        }
    }
    for (_, core) in cores {
        let mut used: BTreeSet<usize> = BTreeSet::new();
        let mut petals = Vec::new();
        for (i, s) in sets.iter().enumerate() {
            if s.len() == core.len() || !is_subset(&core, s) {
                continue;
            }
            let petal = difference(s, &core);
            if petal.iter().all(|e| !used.contains(e)) {
                used.extend(petal);
                petals.push(i);
            }
        }
        if petals.len() > k {
            let first = petals[0];
            let drop: BTreeSet<usize> = petals.iter().copied().collect();
            let mut next = Vec::with_capacity(sets.len() - petals.len() + 1);
            for (i, s) in sets.drain(..).enumerate() {
                if i == first {
                    next.push(core.clone());
                } else if !drop.contains(&i) {
                    next.push(s);
                }
            }
            *sets = next;
            trace.push(RuleEvent::Sunflower {
                core,
                petals: petals.len(),
            });
            return true;
        }
    }
    false
}
