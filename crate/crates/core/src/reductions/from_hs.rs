//! Hitting set to overlay gadget.
//!
//! Elements become users, and `k` special users `p_0..p_{k-1}` are added.
//! For every special user `p_i` and set `S_j` there is a topic with audience
//! `S_j ∪ {p_i}`. With `k` large enough, connecting the specials through a
//! minimum hitting set dominates every other cost.

use std::fmt::Write as _;

use super::{require_feasible, ReductionError};
use crate::format::{content_lines, expect_sidecar_version, Joined, ParseError};
use crate::hitting::HsInstance;
use crate::model::{Instance, Overlay, TopicId, UserId};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KChoice {
    /// Use exactly this many special users.
    Override(usize),
    /// `k = |X|^2 * ceil((1 + eps) / eps)`.
    Epsilon(f64),
}

impl KChoice {
    pub fn resolve(self, n_elements: usize) -> Result<usize, ReductionError> {
        let k = match self {
            KChoice::Override(k) => k,
            KChoice::Epsilon(eps) => {
                if !(eps.is_finite() && eps > 0.0) {
                    return Err(ReductionError::BadEpsilon(eps));
                }
                n_elements * n_elements * ((1.0 + eps) / eps).ceil() as usize
            }
        };
        if k == 0 {
            return Err(ReductionError::ZeroK);
        }
        Ok(k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HsTcoMeta {
    pub n_elements: usize,
    pub k: usize,
    pub sets: Vec<Vec<usize>>,
}

impl HsTcoMeta {
    pub fn element_user(&self, x: usize) -> UserId {
        x
    }

    pub fn special_user(&self, i: usize) -> UserId {
        self.n_elements + i
    }

    pub fn is_special(&self, u: UserId) -> bool {
        u >= self.n_elements
    }

    /// Topic for special user `i` and set `j`.
    pub fn topic(&self, i: usize, j: usize) -> TopicId {
        i * self.sets.len() + j
    }

    pub fn n_users(&self) -> usize {
        self.n_elements + self.k
    }

    pub fn n_topics(&self) -> usize {
        self.k * self.sets.len()
    }

    pub fn instance(&self) -> Instance {
        let audiences = (0..self.k)
            .flat_map(|i| {
                self.sets.iter().map(move |s| {
                    let mut a: Vec<UserId> = s.iter().map(|&x| self.element_user(x)).collect();
                    a.push(self.special_user(i));
                    a
                })
            })
            .collect();
        Instance::new(self.n_users(), audiences).expect("gadget users are in range")
    }

    pub fn source(&self) -> HsInstance {
        HsInstance::new(self.n_elements, self.sets.clone()).expect("source sets were validated")
    }
}

pub fn gen_from_hs(hs: &HsInstance, k: KChoice) -> Result<(Instance, HsTcoMeta), ReductionError> {
    if let Some(j) = hs.first_empty_set() {
        return Err(ReductionError::EmptySet(j));
    }
    let meta = HsTcoMeta {
        n_elements: hs.n_elements(),
        k: k.resolve(hs.n_elements())?,
        sets: hs.sets().to_vec(),
    };
    Ok((meta.instance(), meta))
}

/// Groups the overlay edges joining a special user to an element by that
/// special user and returns the element endpoints of the smallest group,
/// lowest index first on ties. The groups are disjoint, so `k` times the
/// result size never exceeds the overlay cost.
pub fn extract_hs_solution(
    overlay: &Overlay,
    meta: &HsTcoMeta,
) -> Result<Vec<usize>, ReductionError> {
    require_feasible(&meta.instance(), overlay)?;
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); meta.k];
    for e in overlay {
        let (a, b) = e.endpoints();
        if !meta.is_special(a) && meta.is_special(b) {
            levels[b - meta.n_elements].push(a);
        }
    }
    let smallest = levels
        .into_iter()
        .min_by_key(Vec::len)
        .expect("at least one special user");
    Ok(smallest)
}

/// ```text
/// v 1
/// m hs-tco <n_elements> <k> <n_sets>
/// s <size> <e_1> ... <e_size>      one per source set
/// ```
pub fn emit_hs_meta(meta: &HsTcoMeta) -> String {
    let mut out = String::from("v 1\n");
    writeln!(
        out,
        "m hs-tco {} {} {}",
        meta.n_elements,
        meta.k,
        meta.sets.len()
    )
    .unwrap();
    for s in &meta.sets {
        if s.is_empty() {
            writeln!(out, "s 0").unwrap();
        } else {
            writeln!(out, "s {} {}", s.len(), Joined(s)).unwrap();
        }
    }
    out
}

pub fn parse_hs_meta(text: &str) -> Result<HsTcoMeta, ParseError> {
    let mut lines = content_lines(text);
    let version_line = expect_sidecar_version(&mut lines, text)?;
    let head = lines
        .next()
        .ok_or_else(|| ParseError::new(version_line, "missing `m hs-tco` line"))?;
    if head.tag() != "m" || head.tokens.get(1) != Some(&"hs-tco") {
        return Err(head.error("expected `m hs-tco <n_elements> <k> <n_sets>`"));
    }
    head.expect_len(5)?;
    let (n_elements, k, n_sets): (usize, usize, usize) = (head.num(2)?, head.num(3)?, head.num(4)?);
    if k == 0 {
        return Err(head.error("k must be positive"));
    }
    let mut sets = Vec::with_capacity(n_sets);
    let mut last = head.number;
    for line in lines {
        last = line.number;
        if line.tag() != "s" {
            return Err(line.error(format!("unexpected `{}` line in meta", line.tag())));
        }
        let size: usize = line.num(1)?;
        line.expect_len(size + 2)?;
        let mut set: Vec<usize> = line.nums_from(2)?;
        if set.is_empty() {
            return Err(line.error("source sets must be non-empty"));
        }
        if let Some(&x) = set.iter().find(|&&x| x >= n_elements) {
            return Err(line.error(format!("element {x} out of range")));
        }
        set.sort_unstable();
        set.dedup();
        sets.push(set);
    }
    if sets.len() != n_sets {
        return Err(ParseError::new(
            last,
            format!(
                "header declares {n_sets} sets but {} are listed",
                sets.len()
            ),
        ));
    }
    Ok(HsTcoMeta {
        n_elements,
        k,
        sets,
    })
}
