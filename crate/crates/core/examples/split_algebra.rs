//! Split rational functions in `X = q^{-s}` and ideal generators.

use lfac::algebra::{ideal_generator, HalfInt, Scalar, SplitRational};

fn main() {
    let a = Scalar::symbol("a");
    let b = Scalar::symbol("b").mul(&Scalar::sqrt_q_pow(-1));

    let f = SplitRational::euler(a.clone()).mul(&SplitRational::euler(b.clone()));
    println!("f            = {f}");
    println!("f(s + 1/2)   = {}", f.shift(HalfInt::HALF));
    println!("pole roots   = {:?}", f.pole_roots().iter().map(ToString::to_string).collect::<Vec<_>>());

    let g = SplitRational::euler(a.clone()).pow(2);
    let ideal = ideal_generator(&[f.clone(), g.clone()]).unwrap();
    println!("ideal(f, g)  = {} (L-factor: {})", ideal.generator, ideal.is_lfactor);

    let ratio = f.div(&g);
    println!("f / g        = {ratio}");
    println!("order at a   = {}", ratio.vanishing_order(&a));
}
