use std::sync::Arc;
use std::time::Instant;
use tangent_core::diffalg::*;
use tangent_core::groebner::GbOptions;
use tangent_core::idealops::Ideal;
use tangent_core::polycore::*;

fn ring(n: usize) -> Arc<PolyRing<PrimeField>> {
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    PolyRing::new(PrimeField::new(32003).unwrap(), vars, MonomialOrder::DegRevLex).unwrap()
}

fn main() {
    let which = std::env::args().nth(1).unwrap_or_else(|| "veronese".into());
    let opts = GbOptions::default();
    match which.as_str() {
        "veronese" => {
            let r = ring(6);
            let m = build_matrix(MatrixKind::Symmetric(3), &r).unwrap();
            let i = Ideal::new(&r, m.minors(2).unwrap()).unwrap();
            let a = PresentedAlgebra::base(i);
            let t0 = Instant::now();
            let s = tangent_algebra(&a, &opts).unwrap();
            let gb = s.ideal().gb(&opts).unwrap();
            println!("tangent GB: {} elements, {:?}, stats {:?}", gb.elements.len(), t0.elapsed(), gb.stats);
            let t1 = Instant::now();
            let (_, rep) = rees_algebra(&a, &opts).unwrap();
            println!("rees: linear_type={} steps={} in {:?}", rep.linear_type, rep.saturation_steps, t1.elapsed());
            println!("rees basis size {}", rep.rees_ideal.gb(&opts).unwrap().elements.len());
        }
        cat => {
            let rr: usize = cat.strip_prefix("cat").unwrap().parse().unwrap();
            let r = ring(rr + 4);
            let m = build_matrix(MatrixKind::Catalecticant(rr), &r).unwrap();
            let i = Ideal::new(&r, m.minors(2).unwrap()).unwrap();
            let a = PresentedAlgebra::base(i);
            println!("dim A = {}", a.dim(&opts).unwrap());
            let t1 = Instant::now();
            let (_, rep) = rees_algebra(&a, &opts).unwrap();
            println!("cat{rr}: linear_type={} steps={} in {:?}", rep.linear_type, rep.saturation_steps, t1.elapsed());
        }
    }
}
