//! The expression language: parse, evaluate, render as text or JSON.

use lfac::cli::{eval_str, Env, Format};

fn main() {
    let env = Env::default();
    let inputs = [
        "L(unr(a) x sp(3))",
        "tensor(sp(1), sp(1))",
        "ideal(1/(1 - a*X)^2, 1/((1 - a*X)(1 - b*X)))",
        "poles.subregular(gsp4.IIa(unr(a), unr(b)))",
        "split.nov(gsp4.IVa(unr(a)), gl2.st())",
        "gsp4.IIIa(unr(a), unr(a))",
        "L(",
    ];
    for text in inputs {
        match eval_str(&env, text) {
            Ok(v) => println!("{text}\n  = {}\n  json {}", v, v.render(Format::Json)),
            Err(e) => println!("{text}\n  ! {e}"),
        }
    }
}
