//! On-disk basis cache keyed by a content hash of (version, field, ring,
//! order, generators); stale versions never match, and `--no-cache`
//! bypasses it entirely.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use tangent_core::groebner::GroebnerBasis;
use tangent_core::idealops::Ideal;
use tangent_core::polycore::{Field, Monomial, PolyRing, Polynomial};

const CACHE_VERSION: &str = concat!("tf-", env!("CARGO_PKG_VERSION"));

#[derive(Serialize, Deserialize)]
struct StoredTerm {
    exps: Vec<u16>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct StoredBasis {
    version: String,
    elements: Vec<Vec<StoredTerm>>,
    #[serde(default)]
    steps: Option<usize>,
}

/// Render a coefficient portably; prime-field residues print as decimal,
/// rationals as num/den.
fn coeff_to_string<K: Field>(field: &K, c: &K::Elem) -> String {
    field.fmt_elem(c)
}

fn coeff_from_string<K: Field>(field: &K, s: &str) -> Option<K::Elem> {
    // parse sign, numerator, optional /denominator
    let (neg, rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    let (num, den) = match rest.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (rest, None),
    };
    let mut acc = field.zero();
    let ten = field.from_i64(10);
    for ch in num.chars() {
        let d = ch.to_digit(10)?;
        acc = field.add(&field.mul(&acc, &ten), &field.from_i64(d as i64));
    }
    if let Some(den) = den {
        let mut dv = field.zero();
        for ch in den.chars() {
            let d = ch.to_digit(10)?;
            dv = field.add(&field.mul(&dv, &ten), &field.from_i64(d as i64));
        }
        if field.is_zero(&dv) {
            return None;
        }
        acc = field.div(&acc, &dv);
    }
    if neg {
        acc = field.neg(&acc);
    }
    Some(acc)
}

fn ring_descriptor<K: Field>(ring: &PolyRing<K>) -> String {
    format!(
        "{}|{:?}|{:?}|{:?}|{}",
        ring.field.characteristic(),
        ring.var_names(),
        ring.order,
        ring.weights(),
        ring.degree_cap
    )
}

fn poly_descriptor<K: Field>(p: &Polynomial<K>) -> String {
    let field = &p.ring().field;
    let mut s = String::new();
    for (m, c) in &p.terms {
        s.push_str(&format!("{:?}:{};", m.exps, coeff_to_string(field, c)));
    }
    s
}

pub fn ideal_key<K: Field>(ideal: &Ideal<K>) -> String {
    let mut hasher = Sha256::new();
    hasher.update(CACHE_VERSION.as_bytes());
    hasher.update(ring_descriptor(ideal.ring()).as_bytes());
    for g in ideal.generators() {
        hasher.update(poly_descriptor(g).as_bytes());
        hasher.update(b"|");
    }
    hex_of(&hasher.finalize())
}

/// Key for a saturation result: the tangent ideal plus the witness.
pub fn saturation_key<K: Field>(j: &Ideal<K>, witness: &Polynomial<K>) -> String {
    let mut hasher = Sha256::new();
    hasher.update(b"sat|");
    hasher.update(ideal_key(j).as_bytes());
    hasher.update(poly_descriptor(witness).as_bytes());
    hex_of(&hasher.finalize())
}

fn hex_of(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: &Path) -> std::io::Result<Self> {
        std::fs::create_dir_all(dir)?;
        Ok(DiskCache {
            dir: dir.to_path_buf(),
        })
    }

    fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Publish atomically enough for concurrent writers: unique temp file,
    /// then rename.
    fn publish(&self, key: &str, text: String) {
        static COUNTER: std::sync::atomic::AtomicU64 = std::sync::atomic::AtomicU64::new(0);
        let n = COUNTER.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        let tmp = self.dir.join(format!(".tmp-{}-{n}", std::process::id()));
        if std::fs::write(&tmp, text).is_ok() {
            let _ = std::fs::rename(&tmp, self.path_for(key));
        }
    }

    pub fn load_basis<K: Field>(
        &self,
        ring: &Arc<PolyRing<K>>,
        key: &str,
    ) -> Option<GroebnerBasis<K>> {
        let text = std::fs::read_to_string(self.path_for(key)).ok()?;
        let stored: StoredBasis = serde_json::from_str(&text).ok()?;
        if stored.version != CACHE_VERSION {
            return None;
        }
        let field = ring.field.clone();
        let mut elements = Vec::with_capacity(stored.elements.len());
        for el in stored.elements {
            let mut terms = Vec::with_capacity(el.len());
            for t in el {
                if t.exps.len() != ring.nvars() {
                    return None;
                }
                let c = coeff_from_string(&field, &t.coeff)?;
                terms.push((Monomial::from_exps(&t.exps), c));
            }
            elements.push(Polynomial::from_raw_terms(ring, terms));
        }
        Some(GroebnerBasis {
            ring: ring.clone(),
            elements,
            stats: Default::default(),
        })
    }

    pub fn store_basis<K: Field>(&self, key: &str, gb: &GroebnerBasis<K>) {
        let field = &gb.ring.field;
        let stored = StoredBasis {
            version: CACHE_VERSION.to_string(),
            elements: gb
                .elements
                .iter()
                .map(|p| {
                    p.terms
                        .iter()
                        .map(|(m, c)| StoredTerm {
                            exps: m.exps.to_vec(),
                            coeff: coeff_to_string(field, c),
                        })
                        .collect()
                })
                .collect(),
            steps: None,
        };
        let Ok(text) = serde_json::to_string(&stored) else {
            return;
        };
        self.publish(key, text);
    }

    /// Install a cached basis on the ideal if available; otherwise
    /// compute within `opts` and store the result.
    pub fn warm<K: Field>(
        &self,
        ideal: &Ideal<K>,
        opts: &tangent_core::groebner::GbOptions,
    ) -> Result<(), tangent_core::error::CaError> {
        let key = ideal_key(ideal);
        if let Some(gb) = self.load_basis(ideal.ring(), &key) {
            ideal.install_basis(Arc::new(gb));
            return Ok(());
        }
        let gb = ideal.gb(opts)?;
        self.store_basis(&key, &gb);
        Ok(())
    }

    /// Load an ideal presented by its stored reduced basis (steps is the
    /// saturation chain length recorded alongside it).
    pub fn load_ideal<K: Field>(
        &self,
        ring: &Arc<PolyRing<K>>,
        key: &str,
    ) -> Option<(Ideal<K>, usize)> {
        let text = std::fs::read_to_string(self.path_for(key)).ok()?;
        let stored: StoredBasis = serde_json::from_str(&text).ok()?;
        if stored.version != CACHE_VERSION {
            return None;
        }
        let steps = stored.steps?;
        let field = ring.field.clone();
        let mut elements = Vec::with_capacity(stored.elements.len());
        for el in stored.elements {
            let mut terms = Vec::with_capacity(el.len());
            for t in el {
                if t.exps.len() != ring.nvars() {
                    return None;
                }
                let c = coeff_from_string(&field, &t.coeff)?;
                terms.push((Monomial::from_exps(&t.exps), c));
            }
            elements.push(Polynomial::from_raw_terms(ring, terms));
        }
        let ideal = Ideal::new(ring, elements.clone()).ok()?;
        ideal.install_basis(Arc::new(GroebnerBasis {
            ring: ring.clone(),
            elements,
            stats: Default::default(),
        }));
        Some((ideal, steps))
    }

    /// Store an ideal through its reduced basis together with the
    /// saturation step count.
    pub fn store_ideal<K: Field>(
        &self,
        key: &str,
        ideal: &Ideal<K>,
        steps: usize,
        opts: &tangent_core::groebner::GbOptions,
    ) -> Result<(), tangent_core::error::CaError> {
        let gb = ideal.gb(opts)?;
        let field = &gb.ring.field;
        let stored = StoredBasis {
            version: CACHE_VERSION.to_string(),
            elements: gb
                .elements
                .iter()
                .map(|p| {
                    p.terms
                        .iter()
                        .map(|(m, c)| StoredTerm {
                            exps: m.exps.to_vec(),
                            coeff: coeff_to_string(field, c),
                        })
                        .collect()
                })
                .collect(),
            steps: Some(steps),
        };
        if let Ok(text) = serde_json::to_string(&stored) {
            self.publish(key, text);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tangent_core::groebner::GbOptions;
    use tangent_core::polycore::{MonomialOrder, PrimeField, Rationals};

    #[test]
    fn roundtrip_gfp_basis() {
        let dir = std::env::temp_dir().join(format!("tf-cache-test-{}", std::process::id()));
        let cache = DiskCache::new(&dir).unwrap();
        let r = PolyRing::new(
            PrimeField::new(32003).unwrap(),
            vec!["x", "y"],
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let i = Ideal::new(&r, vec![x.add(&y), y.clone()]).unwrap();
        let key = ideal_key(&i);
        cache.warm(&i, &GbOptions::default()).unwrap();
        let loaded = cache.load_basis(&r, &key).unwrap();
        assert_eq!(loaded.elements, i.gb(&GbOptions::default()).unwrap().elements);
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn roundtrip_rational_coefficients() {
        let f = Rationals;
        let half = f.div(&f.one(), &f.from_i64(2));
        let s = coeff_to_string(&f, &half);
        assert_eq!(s, "1/2");
        assert_eq!(coeff_from_string(&f, &s).unwrap(), half);
        let neg = f.neg(&f.from_i64(7));
        let s2 = coeff_to_string(&f, &neg);
        assert_eq!(coeff_from_string(&f, &s2).unwrap(), neg);
    }

    #[test]
    fn version_mismatch_misses() {
        let dir = std::env::temp_dir().join(format!("tf-cache-test2-{}", std::process::id()));
        let cache = DiskCache::new(&dir).unwrap();
        let r = PolyRing::new(
            PrimeField::new(32003).unwrap(),
            vec!["x"],
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        std::fs::write(
            cache.path_for("deadbeef"),
            r#"{"version":"tf-0.0.0","elements":[]}"#,
        )
        .unwrap();
        assert!(cache.load_basis(&r, "deadbeef").is_none());
        std::fs::remove_dir_all(&dir).ok();
    }
}
