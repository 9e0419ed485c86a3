use dicodim::linalg::{row_space, RowBasis, SparseVector};
use dicodim::rat;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Fraction-free Bareiss elimination over the integers; returns the rank.
fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let (h, w) = (m.len(), m.first().map_or(0, Vec::len));
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..w {
        let Some(p) = (rank..h).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..h {
            for c in col + 1..w {
                let v = (&m[r][c] * &m[rank][col] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn sparse(row: &[i64]) -> SparseVector {
    SparseVector::from_entries(row.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, rat(x, 1))))
}

fn random_matrix(rng: &mut StdRng, h: usize, w: usize, rank_hint: usize) -> Vec<Vec<i64>> {
    // products of random low-rank factors plus sparse noise rows
    let k = rank_hint.max(1);
    let left: Vec<Vec<i64>> = (0..h).map(|_| (0..k).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    let right: Vec<Vec<i64>> = (0..k)
        .map(|_| (0..w).map(|_| if rng.gen_bool(0.3) { rng.gen_range(-9..=9) } else { 0 }).collect())
        .collect();
    (0..h)
        .map(|i| (0..w).map(|j| (0..k).map(|t| left[i][t] * right[t][j]).sum()).collect())
        .collect()
}

#[test]
fn rank_matches_bareiss_on_dense_low_rank_matrices() {
    let mut rng = StdRng::seed_from_u64(7);
    for (h, w, k) in [(5, 7, 3), (30, 40, 12), (40, 30, 30)] {
        let m = random_matrix(&mut rng, h, w, k);
        let rows: Vec<SparseVector> = m.iter().map(|r| sparse(r)).collect();
        let b = row_space(&rows, w).unwrap();
        assert_eq!(b.rank(), bareiss_rank(&m), "{h}x{w}");
    }
}

/// Sparse rows with about `per_row` entries in `[-9, 9]`, some of them sums of earlier rows.
fn random_sparse(rng: &mut StdRng, h: usize, w: usize, per_row: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::with_capacity(h);
    for _ in 0..h {
        let row = if !out.is_empty() && rng.gen_bool(0.25) {
            let a = &out[rng.gen_range(0..out.len())];
            let b = &out[rng.gen_range(0..out.len())];
            let (x, y) = (rng.gen_range(-2..=2), rng.gen_range(-2..=2));
            a.iter().zip(b).map(|(p, q)| x * p + y * q).collect()
        } else {
            let mut r = vec![0i64; w];
            for _ in 0..per_row {
                r[rng.gen_range(0..w)] = rng.gen_range(-9..=9);
            }
            r
        };
        out.push(row);
    }
    out
}

#[test]
fn rank_matches_bareiss_on_sparse_matrices() {
    let mut rng = StdRng::seed_from_u64(3);
    for (h, w, per_row) in [(50, 100, 4), (200, 400, 3), (200, 400, 6)] {
        let m = random_sparse(&mut rng, h, w, per_row);
        let rows: Vec<SparseVector> = m.iter().map(|r| sparse(r)).collect();
        let b = row_space(&rows, w).unwrap();
        assert_eq!(b.rank(), bareiss_rank(&m), "{h}x{w}");
    }
}

#[test]
fn reduced_form_independent_of_order() {
    let mut rng = StdRng::seed_from_u64(11);
    let m = random_matrix(&mut rng, 60, 50, 20);
    let mut rows: Vec<SparseVector> = m.iter().map(|r| sparse(r)).collect();
    let a = row_space(&rows, 50).unwrap();
    rows.shuffle(&mut rng);
    let b = row_space(&rows, 50).unwrap();
    assert_eq!(a.dump(), b.dump());
}

proptest! {
    #[test]
    fn small_matrices(m in proptest::collection::vec(proptest::collection::vec(-9i64..=9, 6), 1..8)) {
        let rows: Vec<SparseVector> = m.iter().map(|r| sparse(r)).collect();
        let b = row_space(&rows, 6).unwrap();
        prop_assert_eq!(b.rank(), bareiss_rank(&m));
        for r in &rows {
            prop_assert!(b.contains(r).unwrap());
        }
        let ann = b.annihilator();
        prop_assert_eq!(ann.rank() + b.rank(), 6);
        for x in ann.rows() {
            for r in &rows {
                let dot = r.entries().iter().fold(rat(0, 1), |acc, (p, c)| acc + c * x.get(*p).cloned().unwrap_or_else(|| rat(0, 1)));
                prop_assert!(dot.is_zero());
            }
        }
        let mut again = RowBasis::new(6);
        again.extend(b.rows()).unwrap();
        prop_assert!(again.same_span(&b));
    }
}
