use polyopt::arith::{alg_compare, rat, rat_i, AlgebraicNumber};
use polyopt::mpoly::{MPoly, Ring};
use polyopt::optimize::{optimize, Outcome, SolveConfig};
use std::cmp::Ordering;
use std::time::Instant;

fn show(name: &str, res: &Result<polyopt::optimize::OptimizationResult, polyopt::optimize::SolveError>, t: std::time::Duration) {
    match res {
        Ok(r) => {
            let v = match &r.outcome {
                Outcome::Attained { value, .. } => format!("attained {}", value.decimal(6)),
                Outcome::Unattained { value, .. } => format!("not_attained {}", value.decimal(6)),
                Outcome::RealEmpty => "empty".into(),
                Outcome::UnboundedBelow => "unbounded".into(),
            };
            println!("{name}: {v}  attempts={} cands={} [{:?}]", r.metadata.coord_attempts, r.metadata.candidate_count, t);
        }
        Err(e) => println!("{name}: ERROR {e} [{t:?}]"),
    }
}

fn main() {
    let which: String = std::env::args().nth(1).unwrap_or_default();
    let cfg = SolveConfig::default();

    if which.is_empty() || which == "ggsz" {
        // GGSZ2012: f = (x1+1)^2 + x2^2, F = x1^3 - x2^2
        let r = Ring::new(vec!["x1", "x2"]);
        let x1 = MPoly::var(&r, 0);
        let x2 = MPoly::var(&r, 1);
        let f = x1.add(&MPoly::one(&r)).pow(2).add(&x2.pow(2));
        let con = x1.pow(3).sub(&x2.pow(2));
        let t = Instant::now();
        let res = optimize(&f, &[con], &cfg);
        show("GGSZ2012", &res, t.elapsed());
    }

    if which.is_empty() || which == "isolated" {
        // isolated: f = (x1^2+x2^2-2)(x1^2+x2^2), F = (x1^2+x2^2-1)(x1-3)
        let r = Ring::new(vec!["x1", "x2"]);
        let x1 = MPoly::var(&r, 0);
        let x2 = MPoly::var(&r, 1);
        let ss = x1.pow(2).add(&x2.pow(2));
        let f = ss.sub(&MPoly::constant(&r, rat_i(2))).mul(&ss);
        let con = ss.sub(&MPoly::one(&r)).mul(&x1.sub(&MPoly::constant(&r, rat_i(3))));
        let t = Instant::now();
        let res = optimize(&f, &[con], &cfg);
        show("isolated", &res, t.elapsed());
    }

    if which.is_empty() || which == "nonreached" {
        // f = (x1x2-1)^2 + x2^2 + x3^2 + 42, F = {x3}
        let r = Ring::new(vec!["x1", "x2", "x3"]);
        let x1 = MPoly::var(&r, 0);
        let x2 = MPoly::var(&r, 1);
        let x3 = MPoly::var(&r, 2);
        let f = x1.mul(&x2).sub(&MPoly::one(&r)).pow(2).add(&x2.pow(2)).add(&x3.pow(2)).add(&MPoly::constant(&r, rat_i(42)));
        let t = Instant::now();
        let res = optimize(&f, &[x3.clone()], &cfg);
        show("nonreached", &res, t.elapsed());
    }

    if which.is_empty() || which == "laxlax" {
        let r = Ring::new(vec!["x1", "x2", "x3", "x4"]);
        let x: Vec<MPoly> = (0..4).map(|i| MPoly::var(&r, i)).collect();
        let term = |i: usize| -> MPoly {
            let mut p = x[i].clone();
            for j in 0..4 {
                if j != i {
                    p = p.mul(&x[j].sub(&x[i]));
                }
            }
            p
        };
        let f = x[0].mul(&x[1]).mul(&x[2]).mul(&x[3])
            .sub(&term(0)).sub(&term(1)).sub(&term(2)).sub(&term(3));
        let cons = vec![x[0].clone(), x[1].sub(&x[2]), x[2].sub(&x[3])];
        let t = Instant::now();
        let res = optimize(&f, &cons, &cfg);
        show("LaxLax", &res, t.elapsed());
    }

    if which.is_empty() || which == "maxcut" {
        let r = Ring::new(vec!["x1", "x2", "x3", "x4", "x5"]);
        let x: Vec<MPoly> = (0..5).map(|i| MPoly::var(&r, i)).collect();
        let w = |i: usize, j: usize, c: polyopt::arith::Rational| x[i].mul(&x[j]).scale(&c);
        let f = MPoly::constant(&r, rat_i(-98))
            .add(&w(0, 1, rat(23, 2))).add(&w(0, 2, rat_i(8))).add(&w(0, 3, rat_i(9))).add(&w(0, 4, rat(17, 2)))
            .add(&w(1, 2, rat(25, 2))).add(&w(1, 3, rat_i(13))).add(&w(1, 4, rat(23, 2)))
            .add(&w(2, 3, rat_i(7))).add(&w(2, 4, rat_i(12))).add(&w(3, 4, rat_i(5)));
        let cons: Vec<MPoly> = (0..5).map(|i| x[i].pow(2).sub(&MPoly::one(&r))).collect();
        let t = Instant::now();
        let res = optimize(&f, &cons, &cfg);
        show("maxcut5-1", &res, t.elapsed());
    }

    if which.is_empty() || which == "reached" {
        // f = (10000(x1x2-1)^4 + x1^6) x2^6 + x3^2/124 + 42, F = {x3}
        let r = Ring::new(vec!["x1", "x2", "x3"]);
        let x1 = MPoly::var(&r, 0);
        let x2 = MPoly::var(&r, 1);
        let x3 = MPoly::var(&r, 2);
        let inner = x1.mul(&x2).sub(&MPoly::one(&r)).pow(4).scale(&rat_i(10000)).add(&x1.pow(6));
        let f = inner.mul(&x2.pow(6)).add(&x3.pow(2).scale(&rat(1, 124))).add(&MPoly::constant(&r, rat_i(42)));
        let t = Instant::now();
        let res = optimize(&f, &[x3.clone()], &cfg);
        show("reachedasympt", &res, t.elapsed());
    }
    let _ = alg_compare(&AlgebraicNumber::from_rational(rat_i(0)), &AlgebraicNumber::from_rational(rat_i(0)));
    let _ = Ordering::Equal;
}
