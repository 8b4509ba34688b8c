use std::time::Instant;
use aci_core::generate::{derive_seed, general_linear_forms, random_regular_sequence};
use aci_core::hilbert::hilbert_function;
use aci_core::ideal::ideal_equal;
use aci_core::{Ideal, RingContext};

fn main() {
    let ctx = RingContext::with_arity(4).unwrap();
    let f = random_regular_sequence(&ctx, 2, &[3, 3], 1).unwrap();
    let ells = general_linear_forms(&ctx, &f, derive_seed(1, 2)).unwrap();
    let r = 4u32;
    let ci = Ideal::new(f.clone()).unwrap();
    let sub = Ideal::new(ells.clone()).unwrap();

    let t = Instant::now();
    let j = sub.power(r + 1).sum(&ci);
    let gb = j.gb();
    println!("GB(J = ell^5 + f): {} elements, max degree {}, in {:?}", gb.elements().len(), gb.max_degree(), t.elapsed());

    let t = Instant::now();
    let m = Ideal::maximal(&ctx);
    let lhs = m.power(r + 1).sum(&ci);
    let rhs = sub.product(&m.power(r)).sum(&ci);
    let eq = ideal_equal(&lhs, &rhs);
    println!("reduction identity at t=r: {eq} in {:?}", t.elapsed());

    let t = Instant::now();
    let top = hilbert_function(&j, 2 * r + 1).unwrap();
    println!("hf(R/J, 2r+1) = {top} in {:?}", t.elapsed());
}
