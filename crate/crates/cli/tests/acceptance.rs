//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Criteria 1-5 reproduce the worked examples at their stated time
//! targets; criterion 6 is the property battery; criterion 7 pins
//! byte-identical reporting.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tangent_core::diffalg::{
    fitting_heights, ft_report_from_heights, omega_presentation, rees_algebra, tangent_algebra,
    torsion_witness, PresentedAlgebra,
};
use tangent_core::groebner::GbOptions;
use tangent_core::homology::{
    cy_type_check, is_cohen_macaulay_algebra, koszul_h1_is_zero, resolve_quotient_ring,
};
use tangent_core::idealops::Ideal;
use tangent_core::polycore::{
    Field, Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField, Rationals,
};
use tf::session::RunOptions;

type R = Arc<PolyRing<PrimeField>>;

fn gb() -> GbOptions {
    GbOptions::default()
}

fn opts_no_cache() -> RunOptions {
    RunOptions {
        use_cache: false,
        ..RunOptions::default()
    }
}

fn prime_ring(vars: &[String]) -> R {
    PolyRing::new(
        PrimeField::new(32003).unwrap(),
        vars.to_vec(),
        MonomialOrder::DegRevLex,
    )
    .unwrap()
}

fn corpus_algebra(name: &str) -> PresentedAlgebra<PrimeField> {
    let session =
        tf::battery::example_session(name, PrimeField::new(32003).unwrap(), &opts_no_cache())
            .unwrap();
    PresentedAlgebra::base(session.principal_ideal().unwrap().clone())
}

fn report_value<'r>(
    report: &'r tf::report::Report,
    op: &str,
    key: &str,
) -> Option<&'r serde_json::Value> {
    report
        .operations
        .iter()
        .find(|r| r.op == op)
        .map(|r| if key.is_empty() { &r.result } else { &r.result[key] })
}

#[test]
fn criterion_1_catalecticant_family() {
    let expected = [(1, false), (2, false), (3, true), (4, true)];
    for (r, want_linear) in expected {
        let name = format!("catalecticant-{r}");
        let t0 = Instant::now();
        let out = tf::run_examples(
            &name,
            tangent_core::polycore::GroundField::Prime(32003),
            &opts_no_cache(),
        )
        .unwrap();
        let elapsed = t0.elapsed();
        let report = &out.reports[0];
        let lt = report_value(report, "rees_algebra", "linear_type")
            .and_then(|v| v.as_bool())
            .expect("linear_type verdict");
        let dim = report_value(report, "krull_dim", "")
            .and_then(|v| v.as_i64())
            .expect("dim");
        let height = (r as i64 + 4) - dim;
        assert_eq!(lt, want_linear, "catalecticant-{r} linear type");
        assert_eq!(height, 3, "catalecticant-{r} height");
        assert!(
            elapsed < Duration::from_secs(300),
            "catalecticant-{r} exceeded 5 minutes: {elapsed:?}"
        );
        println!(
            "PASS criterion-1 catalecticant-{r}: linear_type = {lt}, height = 3, {:.1}s",
            elapsed.as_secs_f64()
        );
    }
}

#[test]
fn criterion_2_veronese() {
    let t0 = Instant::now();
    // main verdicts without the stretch attempt
    let out = tf::run_examples(
        "veronese",
        tangent_core::polycore::GroundField::Prime(32003),
        &opts_no_cache(),
    )
    .unwrap();
    let report = &out.reports[0];
    let lt = report_value(report, "rees_algebra", "linear_type")
        .and_then(|v| v.as_bool())
        .unwrap();
    let mu = report_value(report, "mu_mod_cube", "")
        .and_then(|v| v.as_u64())
        .unwrap();
    let cm = report_value(report, "is_cohen_macaulay", "value")
        .and_then(|v| v.as_bool())
        .unwrap();
    assert!(!lt, "veronese must have torsion");
    assert_eq!(mu, 6, "quadric count equals dim R, the sharpness case");
    assert!(cm, "veronese base ring is Cohen-Macaulay");
    let elapsed = t0.elapsed();
    assert!(
        elapsed < Duration::from_secs(600),
        "veronese exceeded 10 minutes: {elapsed:?}"
    );

    // the tangent-algebra Cohen-Macaulay probe is a stretch goal: granted
    // a bounded budget here (the CLI allows up to the documented 30
    // minutes), with not-checkable on timeout the accepted outcome
    let stretch_opts = RunOptions {
        use_cache: false,
        stretch_secs: Some(45),
        ..RunOptions::default()
    };
    let out2 = tf::run_examples(
        "veronese",
        tangent_core::polycore::GroundField::Prime(32003),
        &stretch_opts,
    )
    .unwrap();
    let tangent_cm = out2.reports[0]
        .operations
        .iter()
        .find(|r| r.op == "is_cohen_macaulay" && r.inputs["object"] == "tangent")
        .expect("stretch probe recorded");
    let status = tangent_cm.result["status"].as_str().unwrap();
    assert!(
        status == "ok" || status == "not-checkable",
        "stretch probe must resolve to a value or not-checkable"
    );
    println!(
        "PASS criterion-2 veronese: linear_type = false, mu_mod_cube = 6 = dim R, cm(A) = true, \
         tangent-cm probe = {status}, {:.1}s",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_3_cusp_over_rationals() {
    let t0 = Instant::now();
    let r = PolyRing::new(Rationals, vec!["x", "y"], MonomialOrder::DegRevLex).unwrap();
    let x = Polynomial::var(&r, 0);
    let y = Polynomial::var(&r, 1);
    let f = y
        .mul(&y)
        .unwrap()
        .sub(&x.mul(&x).unwrap().mul(&x).unwrap());
    let a = PresentedAlgebra::base(Ideal::new(&r, vec![f]).unwrap());
    let (rees, rep) = rees_algebra(&a, &gb()).unwrap();
    // the torsion class 2xT2 - 3yT1 lies in the Rees ideal but not in J
    let ext = rees.ring();
    let two = Rationals.from_i64(2);
    let three = Rationals.from_i64(3);
    let xe = Polynomial::var(ext, 0);
    let ye = Polynomial::var(ext, 1);
    let t1 = Polynomial::var(ext, 2);
    let t2 = Polynomial::var(ext, 3);
    let cls = xe
        .mul(&t2)
        .unwrap()
        .scale(&two)
        .sub(&ye.mul(&t1).unwrap().scale(&three));
    assert!(rep.rees_ideal.contains(&cls, &gb()).unwrap());
    assert!(!rep.tangent_ideal.contains(&cls, &gb()).unwrap());
    // the Rees quotient in four variables is not Cohen-Macaulay
    let cm = is_cohen_macaulay_algebra(&rees, &gb()).unwrap();
    assert!(!cm, "cusp Rees quotient must fail Cohen-Macaulayness");
    // and the audit agrees end to end
    let audit_opts = RunOptions {
        characteristic: 0,
        use_cache: false,
        ..RunOptions::default()
    };
    let out = tf::run_audit_command(
        "rees-cm-vs-f1",
        "cusp",
        tangent_core::polycore::GroundField::Rationals,
        &audit_opts,
    )
    .unwrap();
    assert_eq!(out.exit_code, 0);
    let elapsed = t0.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "cusp audit exceeded 1 minute: {elapsed:?}"
    );
    println!(
        "PASS criterion-3 cusp-over-Q: torsion class found, rees not CM, audit consistent, {:.2}s",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_4_fermat_quintic() {
    let t0 = Instant::now();
    let a = corpus_algebra("fermat-5-5");
    assert!(cy_type_check(&a, &gb()).unwrap(), "a-invariant 0 Gorenstein");
    let omega = omega_presentation(&a, &gb()).unwrap();
    let heights = fitting_heights(&omega, &gb()).unwrap();
    let f2 = ft_report_from_heights(omega.rank, &heights, 2);
    assert!(f2.verdict, "quintic satisfies the t = 2 criterion");
    let elapsed = t0.elapsed();
    assert!(
        elapsed < Duration::from_secs(120),
        "fermat quintic exceeded 2 minutes: {elapsed:?}"
    );
    println!(
        "PASS criterion-4 fermat-quintic: trivial canonical module, t=2 criterion holds, {:.2}s",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_5_codim2_equivalence() {
    // independently computed saturation and height verdicts must agree on
    // every Cohen-Macaulay codimension-<=2 graded example
    let names = [
        "cusp",
        "node",
        "generic-2x3",
        "twisted-cubic",
        "quadric-cone",
        "monomial-ci",
        "fermat-3-3",
    ];
    let mut agreements = 0;
    for name in names {
        let a = corpus_algebra(name);
        let (_, rep) = rees_algebra(&a, &gb()).unwrap();
        let omega = omega_presentation(&a, &gb()).unwrap();
        let heights = fitting_heights(&omega, &gb()).unwrap();
        let f1 = ft_report_from_heights(omega.rank, &heights, 1);
        assert_eq!(
            rep.linear_type, f1.verdict,
            "equivalence failed on {name}: saturation {} vs heights {}",
            rep.linear_type, f1.verdict
        );
        agreements += 1;
        println!(
            "  criterion-5 {name}: linear_type = {} = t1-criterion",
            rep.linear_type
        );
    }
    assert!(agreements >= 5, "need at least five examples");
    println!("PASS criterion-5: {agreements}/{agreements} equivalence agreements");
}

fn random_form(r: &R, rng: &mut ChaCha8Rng, degree: u32) -> Polynomial<PrimeField> {
    let n = r.nvars();
    let mut parts = Vec::new();
    for _ in 0..rng.gen_range(2..6) {
        let mut exps = vec![0u16; n];
        for _ in 0..degree {
            exps[rng.gen_range(0..n)] += 1;
        }
        parts.push((Monomial::from_exps(&exps), rng.gen_range(1..32003u64)));
    }
    Polynomial::from_terms(r, parts)
}

#[test]
fn criterion_6_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(2026);

    // Euler identity on 200 random forms with char not dividing the degree
    let vars: Vec<String> = (1..=4).map(|i| format!("x{i}")).collect();
    let r4 = prime_ring(&vars);
    let field = r4.field;
    for i in 0..200 {
        let d = rng.gen_range(2..=6u32);
        let f = random_form(&r4, &mut rng, d);
        if f.is_zero() {
            continue;
        }
        let mut euler = Polynomial::zero(&r4);
        for j in 0..r4.nvars() {
            let xj = Polynomial::var(&r4, j);
            euler = euler.add(&xj.mul(&f.derivative(j)).unwrap());
        }
        assert_eq!(
            euler,
            f.scale(&field.from_i64(d as i64)),
            "euler identity failed at sample {i}"
        );
    }
    println!("  criterion-6 euler identity: 200/200");

    // gradient symmetry identity on 100 random quadrics
    let xt: Vec<String> = (1..=3)
        .map(|i| format!("x{i}"))
        .chain((1..=3).map(|i| format!("T{i}")))
        .collect();
    let rxt = prime_ring(&xt);
    for i in 0..100 {
        // a quadric purely in the X block
        let mut parts = Vec::new();
        for _ in 0..rng.gen_range(2..6) {
            let mut exps = vec![0u16; 6];
            for _ in 0..2 {
                exps[rng.gen_range(0..3)] += 1;
            }
            parts.push((Monomial::from_exps(&exps), rng.gen_range(1..32003u64)));
        }
        let f = Polynomial::from_terms(&rxt, parts);
        let mut lhs = Polynomial::zero(&rxt);
        let mut rhs = Polynomial::zero(&rxt);
        let f_in_t = f.map_into(&rxt, &[3, 4, 5, 0, 1, 2]);
        for j in 0..3 {
            let tj = Polynomial::var(&rxt, 3 + j);
            let xj = Polynomial::var(&rxt, j);
            lhs = lhs.add(&f.derivative(j).mul(&tj).unwrap());
            rhs = rhs.add(&f_in_t.derivative(3 + j).mul(&xj).unwrap());
        }
        assert_eq!(lhs, rhs, "gradient symmetry failed at sample {i}");
    }
    println!("  criterion-6 gradient symmetry: 100/100");

    // saturation-chain stabilization and witness independence on the cusp
    // and the veronese
    for name in ["cusp", "veronese"] {
        let a = corpus_algebra(name);
        let s = tangent_algebra(&a, &gb()).unwrap();
        let g1 = torsion_witness(&a, &gb()).unwrap();
        let n = a.ring().nvars();
        let embed: Vec<usize> = (0..n).collect();
        let g1e = g1.map_into(s.ring(), &embed);
        let (sat1, steps) = s.ideal().saturation(&g1e, &gb()).unwrap();
        // chain is ascending and stabilizes at the reported step count
        let next = sat1.quotient(&g1e, &gb()).unwrap();
        assert!(next.equals(&sat1, &gb()).unwrap(), "{name} chain unstable");
        assert!(steps <= 4, "{name} chain too long");
        // a second, different nonzerodivisor witness gives the same ideal
        let jac = tangent_core::diffalg::jacobian(a.ideal());
        let c = (n as i64 - a.ideal().krull_dim(&gb()).unwrap()) as usize;
        let mut second: Option<Polynomial<PrimeField>> = None;
        'search: for rs in tangent_core::polycore::combinations(jac.rows, c).into_iter().rev() {
            for cs in tangent_core::polycore::combinations(jac.cols, c).into_iter().rev() {
                let det = jac.minor(&rs, &cs).unwrap();
                if det.is_zero() {
                    continue;
                }
                let det = det.make_monic();
                if det != g1 && a.ideal().is_nonzerodivisor(&det, &gb()).unwrap() {
                    second = Some(det);
                    break 'search;
                }
            }
        }
        let g2 = second.expect("a second witness exists");
        let g2e = g2.map_into(s.ring(), &embed);
        let (sat2, _) = s.ideal().saturation(&g2e, &gb()).unwrap();
        assert!(
            sat1.equals(&sat2, &gb()).unwrap(),
            "{name}: saturation depends on the witness"
        );
        println!("  criterion-6 witness independence on {name}: ok (steps = {steps})");
    }

    // krull dimension vs series pole order on 50 homogeneous ideals
    let r3 = prime_ring(&["x".into(), "y".into(), "z".into()]);
    let mut checked = 0;
    while checked < 50 {
        let count = rng.gen_range(1..=3);
        let mut gens: Vec<Polynomial<PrimeField>> = Vec::new();
        for _ in 0..count {
            let d = rng.gen_range(1..=3u32);
            let f = random_form(&r3, &mut rng, d);
            if !f.is_zero() {
                gens.push(f);
            }
        }
        if gens.is_empty() {
            continue;
        }
        let i = Ideal::new(&r3, gens).unwrap();
        if i.is_unit_ideal(&gb()).unwrap() {
            continue;
        }
        let hs = i.hilbert_series(&gb()).unwrap();
        assert_eq!(
            i.krull_dim(&gb()).unwrap(),
            hs.dim as i64,
            "dimension mismatch on sample {checked}"
        );
        checked += 1;
    }
    println!("  criterion-6 dimension vs pole order: 50/50");

    // resolution exactness and the Betti alternating-sum identity on
    // every resolution this suite builds
    let mut resolved = 0;
    for name in [
        "cusp",
        "node",
        "generic-2x3",
        "veronese",
        "fermat-5-5",
        "monomial-ci",
        "twisted-cubic",
        "quadric-cone",
    ] {
        let a = corpus_algebra(name);
        let res = resolve_quotient_ring(a.ideal(), &gb()).unwrap();
        assert!(res.compositions_vanish().unwrap(), "{name} compositions");
        assert!(
            res.differentials
                .iter()
                .all(|d| (0..d.rows).all(|i| (0..d.cols)
                    .all(|j| d.at(i, j).is_zero() || d.at(i, j).degree() != Some(0)))),
            "{name} not minimal"
        );
        // alternating sum identity (standard-graded examples)
        if a.ideal().generators().iter().all(|g| g.is_homogeneous()) {
            let hs = a.ideal().hilbert_series(&gb()).unwrap();
            let mut num: Vec<i64> = hs.numerator.clone();
            for _ in 0..(a.ring().nvars() - hs.dim) {
                let mut next = vec![0i64; num.len() + 1];
                for (i, &c) in num.iter().enumerate() {
                    next[i] += c;
                    next[i + 1] -= c;
                }
                num = next;
            }
            while num.last() == Some(&0) {
                num.pop();
            }
            let alt = res.betti().alternating_sum();
            for (j, &c) in num.iter().enumerate() {
                assert_eq!(
                    alt.get(&(j as i64)).copied().unwrap_or(0),
                    c,
                    "{name} alternating sum at degree {j}"
                );
            }
        }
        resolved += 1;
    }
    println!("  criterion-6 resolution exactness: {resolved}/{resolved}");

    // vanishing first Koszul homology on 20 random regular sequences,
    // certified regular by the dimension drop
    let mut found = 0;
    let mut attempts = 0;
    while found < 20 && attempts < 200 {
        attempts += 1;
        let c = rng.gen_range(2..=3usize);
        let mut gens: Vec<Polynomial<PrimeField>> = Vec::new();
        for _ in 0..c {
            let d = rng.gen_range(1..=2u32);
            let f = random_form(&r3, &mut rng, d);
            if !f.is_zero() {
                gens.push(f);
            }
        }
        if gens.len() != c {
            continue;
        }
        let i = Ideal::new(&r3, gens).unwrap();
        if i.krull_dim(&gb()).unwrap() != 3 - c as i64 {
            continue; // not a regular sequence; resample
        }
        assert!(
            koszul_h1_is_zero(&i, &gb()).unwrap(),
            "regular sequence with nonzero first Koszul homology"
        );
        found += 1;
    }
    assert_eq!(found, 20, "could not assemble 20 regular sequences");
    println!("  criterion-6 Koszul H1 on regular sequences: 20/20");

    // monotonicity of the height conditions across the corpus
    for name in tf::corpus::corpus_names() {
        let a = corpus_algebra(&name);
        let omega = omega_presentation(&a, &gb()).unwrap();
        let heights = fitting_heights(&omega, &gb()).unwrap();
        let v: Vec<bool> = (0..=2)
            .map(|t| ft_report_from_heights(omega.rank, &heights, t).verdict)
            .collect();
        assert!(!(v[2] && !v[1]), "{name}: t=2 held but t=1 failed");
        assert!(!(v[1] && !v[0]), "{name}: t=1 held but t=0 failed");
    }
    println!("  criterion-6 height-condition monotonicity: corpus clean");

    println!("PASS criterion-6: all property suites green");
}

#[test]
fn criterion_7_deterministic_reports() {
    let run = || {
        let out = tf::run_examples(
            "all",
            tangent_core::polycore::GroundField::Prime(32003),
            &opts_no_cache(),
        )
        .unwrap();
        tf::render(&out.reports, true)
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "corpus reports differ between cold runs");
    assert!(first.len() > 1000);
    // sanity: the report parses back as JSON
    let parsed: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert!(parsed.is_array());
    println!(
        "PASS criterion-7: two cold corpus runs byte-identical ({} bytes)",
        first.len()
    );
}
