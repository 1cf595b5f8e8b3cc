//! Search for a positive integer weight vector making a set of
//! polynomials homogeneous, so quasi-homogeneous ideals (the cusp and its
//! differential blocks) get honest graded resolutions.

use crate::polycore::field::Field;
use crate::polycore::poly::Polynomial;

/// Fraction-free kernel basis of an integer matrix (rows are constraints).
fn integer_kernel(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][c];
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let a = m[i][c];
                let pivot_row = m[r].clone();
                for (x, &pv) in m[i].iter_mut().zip(pivot_row.iter()).take(n) {
                    *x = *x * lead - pv * a;
                }
                let g = m[i].iter().fold(0i64, |acc, &x| gcd(acc, x.abs()));
                if g > 1 {
                    for x in m[i].iter_mut() {
                        *x /= g;
                    }
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let pivots: Vec<usize> = pivot_col_of_row;
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![0i64; n];
        v[fc] = 1;
        // back-substitute pivots: row has pivot at pivots[i]
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let row = &m[i];
            let mut acc = 0i64;
            for c in 0..n {
                if c != pc {
                    acc += row[c] * v[c];
                }
            }
            // row[pc] * v[pc] + acc = 0; scale v to keep integrality
            let lead = row[pc];
            if acc % lead == 0 {
                v[pc] = -acc / lead;
            } else {
                let g = gcd(acc.abs(), lead.abs());
                let scale = (lead / g).abs();
                for x in v.iter_mut() {
                    *x *= scale;
                }
                let acc = acc * scale;
                v[pc] = -acc / lead;
            }
        }
        let g = v.iter().fold(0i64, |acc, &x| gcd(acc, x.abs()));
        if g > 1 {
            for x in v.iter_mut() {
                *x /= g;
            }
        }
        basis.push(v);
    }
    basis
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A positive weight vector making every polynomial homogeneous, if one
/// exists; all-ones is preferred when it works.
pub fn detect_positive_grading<K: Field>(polys: &[Polynomial<K>]) -> Option<Vec<u32>> {
    let n = polys.first()?.ring().nvars();
    if polys
        .iter()
        .all(|p| p.terms.iter().map(|(m, _)| m.degree()).collect::<std::collections::HashSet<_>>().len() <= 1)
    {
        return Some(vec![1; n]);
    }
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for p in polys {
        let Some((m0, _)) = p.terms.first() else {
            continue;
        };
        for (m, _) in p.terms.iter().skip(1) {
            let row: Vec<i64> = (0..n)
                .map(|i| m.exps[i] as i64 - m0.exps[i] as i64)
                .collect();
            if row.iter().any(|&x| x != 0) {
                rows.push(row);
            }
        }
    }
    let basis = integer_kernel(&rows, n);
    if basis.is_empty() {
        return None;
    }
    // search small integer combinations for a strictly positive vector
    let k = basis.len().min(3);
    let coeff_range: Vec<i64> = vec![0, 1, -1, 2, -2, 3, -3];
    let mut best: Option<Vec<i64>> = None;
    let mut idx = vec![0usize; k];
    loop {
        let mut v = vec![0i64; n];
        for (bi, &ci) in idx.iter().enumerate() {
            let c = coeff_range[ci];
            for j in 0..n {
                v[j] += c * basis[bi][j];
            }
        }
        if v.iter().all(|&x| x > 0) {
            let better = match &best {
                None => true,
                Some(b) => v.iter().sum::<i64>() < b.iter().sum::<i64>(),
            };
            if better {
                best = Some(v);
            }
        }
        // advance the odometer
        let mut pos = 0;
        loop {
            if pos == k {
                break;
            }
            idx[pos] += 1;
            if idx[pos] < coeff_range.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == k {
            break;
        }
    }
    let v = best?;
    let g = v.iter().fold(0i64, |acc, &x| gcd(acc, x));
    Some(v.iter().map(|&x| (x / g.max(1)) as u32).collect())
}
