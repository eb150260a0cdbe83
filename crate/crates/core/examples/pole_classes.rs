//! Exceptional and subregular poles, factorisations and the ideals J, K.

use lfac::catalog::{Gl2Param, Gsp4Param};
use lfac::poles::{exceptional_poles, ideals_jk, nov_split, ps_split, spinor_pole_table};
use lfac::wdrep::Character;

fn main() {
    let [a, b, c, d] = ["a", "b", "c", "d"].map(Character::unr_symbol);

    let pi = Gsp4Param::type_i(a.clone(), b, c.clone()).unwrap();
    // chi_pi mu1 mu2 = (a mu1)^2 plants an exceptional pole at a*d
    let mu2 = a.pow(2).mul(&d).div(&c);
    let sigma = Gl2Param::principal_series(d, mu2, false).unwrap();

    for e in &exceptional_poles(&pi, &sigma).unwrap().entries {
        println!("exceptional {} from {} witness(es)", e.root, e.witnesses.len());
    }
    let (reg, ex) = nov_split(&pi, &sigma).unwrap();
    println!("L_reg = {reg}\nL_ex  = {ex}");

    for e in &spinor_pole_table(&pi).entries {
        println!("{:<12} {}", e.class.name(), e.root);
    }
    let (_, sub, kir) = ps_split(&pi);
    println!("L_sub = {sub}\nL_Kir = {kir}");

    let (j, k) = ideals_jk(&pi).unwrap();
    println!("J = {j}\nK = {k}");
}
