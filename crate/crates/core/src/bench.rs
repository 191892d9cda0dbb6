//! Benchmark runner: every (instance, algorithm) cell is solved and
//! validated, possibly in parallel, and the rows come back sorted by
//! instance then algorithm.

use std::io;

use rayon::prelude::*;

use crate::connectivity::validate_solution;
use crate::model::Instance;
use crate::solvers::{AlgoChoice, SolverLimits};

pub const CSV_HEADER: [&str; 10] = [
    "instance",
    "n_users",
    "n_topics",
    "max_audience",
    "algo",
    "cost",
    "optimal",
    "millis",
    "seed",
    "status",
];

#[derive(Debug, Clone)]
pub struct BenchCase {
    pub name: String,
    pub instance: Instance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub instance: String,
    pub n_users: usize,
    pub n_topics: usize,
    pub max_audience: usize,
    pub algo: AlgoChoice,
    /// `-1` when the cell failed.
    pub cost: i64,
    pub optimal: bool,
    pub millis: u128,
    pub seed: u64,
    /// `ok`, or the failure reason.
    pub status: String,
}

impl BenchRow {
    fn record(&self) -> [String; 10] {
        [
            self.instance.clone(),
            self.n_users.to_string(),
            self.n_topics.to_string(),
            self.max_audience.to_string(),
            self.algo.to_string(),
            self.cost.to_string(),
            self.optimal.to_string(),
            self.millis.to_string(),
            self.seed.to_string(),
            self.status.clone(),
        ]
    }
}

fn run_cell(case: &BenchCase, algo: AlgoChoice, limits: &SolverLimits, seed: u64) -> BenchRow {
    let start = std::time::Instant::now();
    let outcome = algo.run(&case.instance, limits);
    let millis = start.elapsed().as_millis();
    let (cost, optimal, status) = match outcome {
        Ok(report) => match validate_solution(&case.instance, &report.overlay) {
            Ok(v) if v.feasible => (report.cost() as i64, report.optimal, "ok".to_string()),
            Ok(_) => (-1, false, "infeasible output".to_string()),
            Err(e) => (-1, false, e.to_string()),
        },
        Err(e) => (-1, false, e.to_string()),
    };
    BenchRow {
        instance: case.name.clone(),
        n_users: case.instance.n_users(),
        n_topics: case.instance.n_topics(),
        max_audience: case.instance.max_audience(),
        algo,
        cost,
        optimal,
        millis,
        seed,
        status,
    }
}

/// Runs all cells on a pool of `jobs` threads. Rows are ordered by instance
/// name, then by position in `algos`.
pub fn run_bench(
    cases: &[BenchCase],
    algos: &[AlgoChoice],
    limits: &SolverLimits,
    seed: u64,
    jobs: usize,
) -> Result<Vec<BenchRow>, rayon::ThreadPoolBuildError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()?;
    let cells: Vec<(usize, usize)> = (0..cases.len())
        .flat_map(|i| (0..algos.len()).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<((usize, usize), BenchRow)> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(i, j)| ((i, j), run_cell(&cases[i], algos[j], limits, seed)))
            .collect()
    });
    rows.sort_by(|a, b| (&a.1.instance, a.0).cmp(&(&b.1.instance, b.0)));
    Ok(rows.into_iter().map(|(_, r)| r).collect())
}

pub fn write_csv<W: io::Write>(rows: &[BenchRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.record())?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::Algo;

    fn cases() -> Vec<BenchCase> {
        vec![
            BenchCase {
                name: "b".into(),
                instance: Instance::new(3, vec![vec![0, 1, 2]]).unwrap(),
            },
            BenchCase {
                name: "a".into(),
                instance: Instance::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap(),
            },
        ]
    }

    #[test]
    fn rows_are_sorted_and_complete() {
        let algos = [
            AlgoChoice::Fixed(Algo::ExactHs),
            AlgoChoice::Fixed(Algo::TrivialPairs),
        ];
        let rows = run_bench(&cases(), &algos, &SolverLimits::default(), 7, 2).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].instance, "a");
        assert_eq!(rows[0].algo, AlgoChoice::Fixed(Algo::ExactHs));
        assert_eq!(rows[0].cost, 3);
        assert_eq!(rows[1].cost, -1);
        assert_ne!(rows[1].status, "ok");
        assert_eq!(rows[2].instance, "b");
        assert_eq!(rows[2].cost, 2);
        assert_eq!(rows[2].status, "ok");
    }

    #[test]
    fn csv_has_header() {
        let rows = run_bench(
            &cases(),
            &[AlgoChoice::Auto],
            &SolverLimits::default(),
            0,
            1,
        )
        .unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with(
            "instance,n_users,n_topics,max_audience,algo,cost,optimal,millis,seed,status\n"
        ));
        assert_eq!(text.lines().count(), 3);
    }
}
