//! Brute-force reference implementations. They share no code with the
//! library beyond plain data access, so agreement is meaningful.

#![allow(dead_code)]

use std::collections::VecDeque;

use tco_core::{Edge, Instance, Overlay};

/// BFS per topic over overlay edges whose endpoints both lie in the audience.
pub fn oracle_feasible(instance: &Instance, edges: &[(usize, usize)]) -> bool {
    let n = instance.n_users();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    instance.audiences().iter().all(|aud| {
        if aud.len() <= 1 {
            return true;
        }
        let mut member = vec![false; n];
        for &u in aud {
            member[u] = true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([aud[0]]);
        seen[aud[0]] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if member[y] && !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == aud.len()
    })
}

pub fn overlay_pairs(overlay: &Overlay) -> Vec<(usize, usize)> {
    overlay.iter().map(|e: Edge| e.endpoints()).collect()
}

/// Smallest feasible overlay size found by trying every subset of all
/// `n(n-1)/2` user pairs in order of size. Suitable for `n <= 6`.
pub fn oracle_tco_opt(instance: &Instance) -> usize {
    let n = instance.n_users();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    assert!(pairs.len() <= 24, "oracle limited to small instances");
    let mut best = usize::MAX;
    for mask in 0u32..(1 << pairs.len()) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let subset: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        if oracle_feasible(instance, &subset) {
            best = size;
        }
    }
    best
}

/// Minimum hitting set size by subset enumeration, `None` if some set is empty.
pub fn oracle_hs_opt(n_elements: usize, sets: &[Vec<usize>]) -> Option<usize> {
    (0u32..(1 << n_elements))
        .filter(|mask| sets.iter().all(|s| s.iter().any(|&x| mask >> x & 1 == 1)))
        .map(|mask| mask.count_ones() as usize)
        .min()
}

pub fn oracle_hits(sets: &[Vec<usize>], chosen: &[usize]) -> bool {
    sets.iter().all(|s| s.iter().any(|x| chosen.contains(x)))
}

pub fn oracle_vc_opt(n: usize, edges: &[(usize, usize)]) -> usize {
    (0u32..(1 << n))
        .filter(|mask| {
            edges
                .iter()
                .all(|&(a, b)| mask >> a & 1 == 1 || mask >> b & 1 == 1)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

pub fn oracle_is_vc(edges: &[(usize, usize)], cover: &[usize]) -> bool {
    edges
        .iter()
        .all(|(a, b)| cover.contains(a) || cover.contains(b))
}

/// Connectivity of an edge set on `n` vertices, by repeated relabeling.
pub fn oracle_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut label: Vec<usize> = (0..n).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b) in edges {
            let m = label[a].min(label[b]);
            if label[a] != m || label[b] != m {
                label[a] = m;
                label[b] = m;
                changed = true;
            }
        }
    }
    label.iter().all(|&l| l == 0)
}

/// No two audiences share two users.
pub fn oracle_pairwise_intersection_at_most_one(instance: &Instance) -> bool {
    let a = instance.audiences();
    (0..a.len())
        .all(|i| (i + 1..a.len()).all(|j| a[i].iter().filter(|u| a[j].contains(u)).count() <= 1))
}

/// Small deterministic generator so oracle-driven tests do not depend on
/// the library's own sampling.
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    /// `k` distinct values from `0..n`, sorted.
    pub fn subset(&mut self, n: usize, k: usize) -> Vec<usize> {
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = i + self.below(n - i);
            pool.swap(i, j);
        }
        let mut out = pool[..k].to_vec();
        out.sort_unstable();
        out
    }
}
