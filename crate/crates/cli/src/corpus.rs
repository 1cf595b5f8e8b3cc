//! Built-in example corpus, expressed in the input grammar itself.

/// Canonical corpus, in the order `run all` executes it.
pub fn corpus_names() -> Vec<String> {
    vec![
        "cusp".into(),
        "node".into(),
        "generic-2x3".into(),
        "catalecticant-1".into(),
        "catalecticant-2".into(),
        "catalecticant-3".into(),
        "catalecticant-4".into(),
        "veronese".into(),
        "fermat-5-5".into(),
    ]
}

/// Additional named sessions used by the codimension-two equivalence
/// battery; available to `run` like any corpus entry.
pub fn extended_names() -> Vec<String> {
    vec![
        "twisted-cubic".into(),
        "quadric-cone".into(),
        "monomial-ci".into(),
        "fermat-3-3".into(),
        "fermat-4-4".into(),
    ]
}

pub fn example_source(name: &str) -> Option<String> {
    if let Some(rest) = name.strip_prefix("catalecticant-") {
        let r: usize = rest.parse().ok()?;
        if !(1..=4).contains(&r) {
            return None;
        }
        return Some(format!(
            "ring x1..x{n}; matrix M = catalecticant {r}; ideal I = minors 2 M;",
            n = r + 4
        ));
    }
    if let Some(rest) = name.strip_prefix("fermat-") {
        let mut it = rest.split('-');
        let d: u32 = it.next()?.parse().ok()?;
        let n: usize = it.next()?.parse().ok()?;
        if it.next().is_some() || d < 2 || !(2..=8).contains(&n) {
            return None;
        }
        let terms: Vec<String> = (1..=n).map(|i| format!("x{i}^{d}")).collect();
        return Some(format!(
            "ring x1..x{n}; ideal I = {};",
            terms.join(" + ")
        ));
    }
    let src = match name {
        "cusp" => "ring x y; ideal I = y^2 - x^3;",
        "node" => "ring x y; ideal I = x*y;",
        "veronese" => "ring x1..x6; matrix M = symmetric 3; ideal I = minors 2 M;",
        "generic-2x3" => "ring x1..x6; matrix M = generic 2 3; ideal I = minors 2 M;",
        "twisted-cubic" => "ring x y z w; matrix M = [x, y, z; y, z, w]; ideal I = minors 2 M;",
        "quadric-cone" => "ring x y z; ideal I = x^2 - y*z;",
        "monomial-ci" => "ring x y z w; ideal I = x*z, y*w;",
        _ => return None,
    };
    Some(src.to_string())
}
