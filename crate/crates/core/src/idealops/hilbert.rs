//! Hilbert series of graded quotients and combinatorial Krull dimension,
//! both computed from the lead-term ideal.

use crate::polycore::monomial::Monomial;

/// h(t) / (1-t)^dim in lowest form (h(1) != 0), for a standard-graded
/// quotient R/I.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    /// Coefficients of the numerator, index = degree.
    pub numerator: Vec<i64>,
    /// Pole order at t = 1; equals the Krull dimension of the quotient.
    pub dim: usize,
}

impl HilbertSeries {
    /// Series of R/I from the minimal generators of the lead-term ideal,
    /// in a ring with `nvars` variables. `None` for the zero ring (unit
    /// ideal).
    pub fn from_lead_terms(lead: &[Monomial], nvars: usize) -> Option<HilbertSeries> {
        let gens = minimalize(lead.to_vec());
        if gens.iter().any(|m| m.is_one()) {
            return None;
        }
        let mut num = numerator(gens);
        // cancel (1-t) factors down to lowest form
        let mut dim = nvars;
        while !num.is_empty() && num.iter().sum::<i64>() == 0 {
            debug_assert!(dim > 0);
            num = divide_by_one_minus_t(&num);
            dim -= 1;
        }
        trim(&mut num);
        Some(HilbertSeries {
            numerator: num,
            dim,
        })
    }

    /// Degree of the numerator.
    pub fn numerator_degree(&self) -> usize {
        self.numerator.len().saturating_sub(1)
    }

    /// a-invariant: degree of the numerator minus the pole order.
    pub fn a_invariant(&self) -> i64 {
        self.numerator_degree() as i64 - self.dim as i64
    }

    /// Coefficient of t^k in the expansion, i.e. dim_k of the degree-k
    /// graded piece of the quotient.
    pub fn coefficient(&self, k: usize) -> i64 {
        let d = self.dim;
        let mut acc: i64 = 0;
        for (i, &h) in self.numerator.iter().enumerate() {
            if i > k {
                break;
            }
            let j = k - i;
            let c = if d == 0 {
                i64::from(j == 0)
            } else {
                binom(j + d - 1, d - 1)
            };
            acc += h * c;
        }
        acc
    }

    pub fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            let piece = match (c, i) {
                (1, 0) => "1".to_string(),
                (-1, 0) => "-1".to_string(),
                (1, _) => mono.clone(),
                (-1, _) => format!("-{mono}"),
                (c, 0) => format!("{c}"),
                (c, _) => format!("{c}{mono}"),
            };
            if parts.is_empty() {
                parts.push(piece);
            } else if let Some(rest) = piece.strip_prefix('-') {
                parts.push(format!("- {rest}"));
            } else {
                parts.push(format!("+ {piece}"));
            }
        }
        let num = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        };
        match self.dim {
            0 => num,
            1 => format!("({num})/(1-t)"),
            d => format!("({num})/(1-t)^{d}"),
        }
    }
}

pub(crate) fn binom(n: usize, k: usize) -> i64 {
    let mut acc: i64 = 1;
    for j in 0..k {
        acc = acc * (n - j) as i64 / (j + 1) as i64;
    }
    acc
}

fn trim(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn divide_by_one_minus_t(num: &[i64]) -> Vec<i64> {
    // (1-t) * q = num with num(1) = 0: q_i = sum of num[0..=i]
    let mut out: Vec<i64> = Vec::with_capacity(num.len().saturating_sub(1));
    let mut acc = 0i64;
    for (i, &a) in num.iter().enumerate() {
        acc += a;
        if i + 1 < num.len() {
            out.push(acc);
        } else {
            debug_assert_eq!(acc, 0);
        }
    }
    trim(&mut out);
    out
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut v = vec![1i64];
    for _ in 0..d {
        v = poly_mul(&v, &[1, -1]);
    }
    v
}

/// Numerator of HS(R/I) over (1-t)^nvars for a monomial ideal given by
/// minimal generators, by pivot splitting.
fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    // split off single-variable generators of degree 1: by minimality no
    // other generator touches those variables, and each contributes a
    // plain (1-t) factor
    let (vars, rest): (Vec<Monomial>, Vec<Monomial>) = gens
        .into_iter()
        .partition(|m| m.degree() == 1);
    if !vars.is_empty() {
        return poly_mul(&one_minus_t_pow(vars.len() as u32), &numerator(rest));
    }
    let gens = rest;
    if gens.len() == 1 {
        let d = gens[0].degree();
        let mut v = vec![0i64; d as usize + 1];
        v[0] = 1;
        v[d as usize] = -1;
        return v;
    }
    // pure powers of distinct variables: product formula
    let simple = gens
        .iter()
        .all(|m| m.exps.iter().filter(|&&e| e > 0).count() == 1);
    if simple {
        let mut distinct = true;
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if !gens[i].is_coprime(&gens[j]) {
                    distinct = false;
                }
            }
        }
        if distinct {
            let mut acc = vec![1i64];
            for g in &gens {
                let d = g.degree() as usize;
                let mut f = vec![0i64; d + 1];
                f[0] = 1;
                f[d] = -1;
                acc = poly_mul(&acc, &f);
            }
            return acc;
        }
    }
    // pivot on the most frequent variable
    let nvars = gens[0].exps.len();
    let mut freq = vec![0usize; nvars];
    for g in &gens {
        for (i, &e) in g.exps.iter().enumerate() {
            if e > 0 {
                freq[i] += 1;
            }
        }
    }
    let pivot = (0..nvars).max_by_key(|&i| freq[i]).unwrap();

    // I + (x): keep generators without x, adjoin x itself
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exps[pivot] == 0)
        .cloned()
        .collect();
    plus.push(Monomial::var(nvars, pivot));
    // I : x, exponents of x decremented
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut m = g.clone();
            if m.exps[pivot] > 0 {
                m.exps[pivot] -= 1;
            }
            m
        })
        .collect();
    let n_plus = numerator(minimalize(plus));
    let n_colon = numerator(minimalize(colon));
    // N(I) = N(I + (x)) + t * N(I : x)
    let mut out = vec![0i64; n_plus.len().max(n_colon.len() + 1)];
    for (i, &a) in n_plus.iter().enumerate() {
        out[i] += a;
    }
    for (i, &a) in n_colon.iter().enumerate() {
        out[i + 1] += a;
    }
    trim(&mut out);
    out
}

/// Krull dimension of R/I from the lead-term ideal: the size of the
/// largest variable subset meeting the support of no lead term.
pub fn dimension_from_lead_terms(lead: &[Monomial], nvars: usize) -> i64 {
    let gens = minimalize(lead.to_vec());
    if gens.iter().any(|m| m.is_one()) {
        return -1;
    }
    let supports: Vec<u32> = gens
        .iter()
        .map(|m| {
            m.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u32, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    // search over candidate sets: start from everything, branch on the
    // variables of a violated support
    fn best(candidate: u32, supports: &[u32], seen: &mut std::collections::HashSet<u32>) -> u32 {
        if !seen.insert(candidate) {
            return 0;
        }
        match supports.iter().find(|&&s| s & !candidate == 0) {
            None => candidate.count_ones(),
            Some(&viol) => {
                let mut bestv = 0;
                let mut bits = viol;
                while bits != 0 {
                    let b = bits & bits.wrapping_neg();
                    bits ^= b;
                    bestv = bestv.max(best(candidate & !b, supports, seen));
                }
                bestv
            }
        }
    }
    let full = if nvars >= 32 {
        u32::MAX
    } else {
        (1u32 << nvars) - 1
    };
    let mut seen = std::collections::HashSet::new();
    best(full, &supports, &mut seen) as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn series_of_x_squared_in_two_vars() {
        // (x^2) in k[x,y]: (1+t)/(1-t)
        let hs = HilbertSeries::from_lead_terms(&[m(&[2, 0])], 2).unwrap();
        assert_eq!(hs.numerator, vec![1, 1]);
        assert_eq!(hs.dim, 1);
        assert_eq!(hs.a_invariant(), 0);
        // graded pieces: 1, 2, 2, 2, ...
        assert_eq!(hs.coefficient(0), 1);
        assert_eq!(hs.coefficient(1), 2);
        assert_eq!(hs.coefficient(5), 2);
    }

    #[test]
    fn series_of_zero_ideal() {
        // (0) in k[x]: 1/(1-t)
        let hs = HilbertSeries::from_lead_terms(&[], 1).unwrap();
        assert_eq!(hs.numerator, vec![1]);
        assert_eq!(hs.dim, 1);
        assert_eq!(hs.coefficient(7), 1);
    }

    #[test]
    fn series_of_quintic_hypersurface() {
        // degree-5 hypersurface in 5 variables: (1+t+t^2+t^3+t^4)/(1-t)^4
        let hs = HilbertSeries::from_lead_terms(&[m(&[5, 0, 0, 0, 0])], 5).unwrap();
        assert_eq!(hs.numerator, vec![1, 1, 1, 1, 1]);
        assert_eq!(hs.dim, 4);
        assert_eq!(hs.a_invariant(), 0);
    }

    #[test]
    fn unit_ideal_has_no_series() {
        assert!(HilbertSeries::from_lead_terms(&[m(&[0, 0])], 2).is_none());
    }

    #[test]
    fn dimension_examples() {
        // R/(x) in k[x,y]: dim 1
        assert_eq!(dimension_from_lead_terms(&[m(&[1, 0])], 2), 1);
        // R/(x,y): dim 0
        assert_eq!(dimension_from_lead_terms(&[m(&[1, 0]), m(&[0, 1])], 2), 0);
        // R/(xy): dim 1
        assert_eq!(dimension_from_lead_terms(&[m(&[1, 1])], 2), 1);
        // R/0: dim n
        assert_eq!(dimension_from_lead_terms(&[], 3), 3);
        // unit ideal: -1 convention
        assert_eq!(dimension_from_lead_terms(&[m(&[0, 0])], 2), -1);
    }

    #[test]
    fn dim_matches_pole_order_on_monomial_samples() {
        let samples: Vec<Vec<Monomial>> = vec![
            vec![m(&[2, 0, 0]), m(&[1, 1, 0])],
            vec![m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[1, 0, 1])],
            vec![m(&[3, 0, 0]), m(&[0, 3, 0]), m(&[0, 0, 3])],
            vec![m(&[2, 1, 0]), m(&[0, 0, 2])],
        ];
        for lead in samples {
            let hs = HilbertSeries::from_lead_terms(&lead, 3).unwrap();
            assert_eq!(hs.dim as i64, dimension_from_lead_terms(&lead, 3));
        }
    }

    #[test]
    fn coefficients_match_direct_count() {
        // R/(x^2, xy) in k[x,y]: standard monomials 1; x, y; y^2; y^3; ...
        let lead = vec![m(&[2, 0]), m(&[1, 1])];
        let hs = HilbertSeries::from_lead_terms(&lead, 2).unwrap();
        assert_eq!(hs.coefficient(0), 1);
        assert_eq!(hs.coefficient(1), 2);
        assert_eq!(hs.coefficient(2), 1);
        assert_eq!(hs.coefficient(9), 1);
    }
}
