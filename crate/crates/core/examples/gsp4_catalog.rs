//! GSp(4) parameters by type, theta lifts and tensor L-factors with GL(2).

use lfac::catalog::{nov_lfactor, theta_lift, Catalog, CatalogArg, Gl2Param, Gsp4Param, StType};
use lfac::wdrep::Character;

fn main() {
    let (a, b, c) = (Character::unr_symbol("a"), Character::unr_symbol("b"), Character::unr_symbol("c"));

    let iva = Gsp4Param::type_iva(a.clone()).unwrap();
    let st = Gl2Param::steinberg();
    println!("{iva}\n  L = {}\n  L(x St) = {}", iva.lfactor(), nov_lfactor(&iva, &st).unwrap());

    let catalog = Catalog::default();
    let iia = catalog
        .build(StType::IIa, &[CatalogArg::Char(a.clone()), CatalogArg::Char(b.clone())])
        .unwrap();
    println!("{iia}\n  L = {}", iia.lfactor());

    // equal central characters a*b
    let t1 = Gl2Param::principal_series(a.clone(), b.clone(), false).unwrap();
    let t2 = Gl2Param::principal_series(c.clone(), a.mul(&b).div(&c), false).unwrap();
    match theta_lift(&t1, &t2) {
        Ok(pi) => println!("{pi}\n  L(x St) = {}", nov_lfactor(&pi, &st).unwrap()),
        Err(e) => println!("theta lift rejected: {e}"),
    }

    let bad = Gsp4Param::type_iiia(b.clone(), b);
    println!("IIIa with equal characters: {}", bad.unwrap_err());
}
