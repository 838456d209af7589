//! One test per acceptance criterion; each prints a single PASS/FAIL line.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use runsort::bijections::{
    alpha, beta, canonical_extend, prop0_forward, prop0_inverse, psi, psi_inverse, theta, theta_inverse,
};
use runsort::counting::{
    a_table, a_table_binomial, bell, binomials, dobinski_estimate, h_table, l_sequence, ncmf_polynomial, r_table,
    stirling2,
};
use runsort::generation::{generate_ncmf, generate_rsp, generate_separated, generate_t, oracle_rsp};
use runsort::series::{bell_egf_check, bivariate_rhs, egf_rhs};
use runsort::{Permutation, RgfIter, RgfWord, SetPartition};

fn report(id: u32, name: &str, result: Result<String, String>) {
    match result {
        Ok(detail) => println!("PASS criterion {id:>2} {name}: {detail}"),
        Err(detail) => {
            println!("FAIL criterion {id:>2} {name}: {detail}");
            panic!("criterion {id} failed: {detail}");
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn ceil_half(n: usize) -> usize {
    n.div_ceil(2)
}

#[test]
fn criterion_01_table_one() {
    let printed: [&[u32]; 7] = [
        &[0],
        &[1, 0],
        &[1, 1, 0],
        &[1, 4, 0, 0],
        &[1, 11, 3, 0, 0],
        &[1, 26, 25, 0, 0, 0],
        &[1, 57, 130, 15, 0, 0, 0],
    ];
    let (table, elapsed) = timed(|| r_table(7));
    let mut mismatches = Vec::new();
    let mut total = 0;
    for (row, values) in printed.iter().enumerate() {
        let n = row + 1;
        for (col, &want) in values.iter().enumerate() {
            let k = col + 1;
            total += 1;
            let got = table.get(&[n, k]);
            if got != BigUint::from(want) {
                mismatches.push(format!("r({n},{k}) = {got}, printed {want}"));
            }
        }
    }
    let matched = total - mismatches.len();
    let result = if !mismatches.is_empty() {
        Err(format!("{matched}/{total} entries match; {}", mismatches.join("; ")))
    } else if elapsed >= Duration::from_secs(1) {
        Err(format!("took {elapsed:?}"))
    } else {
        Ok(format!("{matched}/{total} entries in {elapsed:?}"))
    };
    report(1, "r-table(7) equals the printed table", result);
}

const LISTING: [&[&str]; 4] = [
    &["1,2,3,4,5"],
    &[
        "1,3,4,5,2",
        "1,3,4,2,5",
        "1,3,5,2,4",
        "1,3,2,4,5",
        "1,4,5,2,3",
        "1,4,2,3,5",
        "1,2,4,5,3",
        "1,2,4,3,5",
        "1,5,2,3,4",
        "1,2,5,3,4",
        "1,2,3,5,4",
    ],
    &["1,5,2,4,3", "1,4,2,5,3", "1,3,2,5,4"],
    &[],
];

#[test]
fn criterion_02_listing_for_five() {
    let (family, elapsed) = timed(|| generate_rsp(5).unwrap());
    let result = (|| {
        let sizes: Vec<usize> = (1..=4).map(|k| family.cell(k).len()).collect();
        if sizes != [1, 11, 3, 0] {
            return Err(format!("cell sizes {sizes:?}"));
        }
        for (i, want) in LISTING.iter().enumerate() {
            let got: Vec<String> = family.cell(i + 1).iter().map(Permutation::to_string).collect();
            if got != *want {
                return Err(format!("cell {} is {got:?}", i + 1));
            }
        }
        if elapsed >= Duration::from_secs(1) {
            return Err(format!("took {elapsed:?}"));
        }
        Ok(format!("sizes 1/11/3/0, order matches, {elapsed:?}"))
    })();
    report(2, "generate_rsp(5) reproduces the listing", result);
}

#[test]
fn criterion_03_bell_correspondence() {
    let r = r_table(20);
    let b = bell(20);
    let bad: Vec<usize> = (2..=20).filter(|&n| r.row_sum(n) != b.get(&[n - 1])).collect();
    let result = if bad.is_empty() {
        Ok(format!("sum_k r(20,k) = {}", r.row_sum(20)))
    } else {
        Err(format!("fails at n = {bad:?}"))
    };
    report(3, "row sums of r are Bell numbers, n <= 20", result);
}

#[test]
fn criterion_04_stirling_shift() {
    let h = h_table(20);
    let s = stirling2(20);
    let mut bad = Vec::new();
    for n in 1..=20 {
        for r in 1..=n {
            if h.get(&[n, r]) != s.get(&[n - 1, r - 1]) {
                bad.push((n, r));
            }
        }
    }
    let result = if bad.is_empty() {
        Ok("210 entries".to_string())
    } else {
        Err(format!("{bad:?}"))
    };
    report(4, "h(n,r) = S(n-1,r-1), n <= 20", result);
}

#[test]
fn criterion_05_recurrence_cross_check() {
    let a = a_table(15);
    let b = a_table_binomial(15);
    let r = r_table(15);
    let h = h_table(15);
    let result = (|| {
        if a != b {
            return Err("a tables differ".to_string());
        }
        for n in 0..=15 {
            for k in 0..=15 {
                let sum: BigUint = (0..=15).map(|rr| a.get(&[n, k, rr])).sum();
                if sum != r.get(&[n, k]) {
                    return Err(format!("sum over r of a({n},{k},r) = {sum}"));
                }
            }
            for rr in 0..=15 {
                let sum: BigUint = (0..=15).map(|k| a.get(&[n, k, rr])).sum();
                if n >= 1 && sum != h.get(&[n, rr]) {
                    return Err(format!("sum over k of a({n},k,{rr}) = {sum}"));
                }
            }
        }
        Ok("4096 entries agree, marginals match".to_string())
    })();
    report(5, "two a-recurrences agree with r and h marginals", result);
}

#[test]
fn criterion_06_oracle_equivalence() {
    let (result, elapsed) = timed(|| {
        for n in 1..=10 {
            let dp = generate_rsp(n).unwrap().sorted_cells();
            let oracle = oracle_rsp(n).unwrap().sorted_cells();
            if dp != oracle {
                return Err(format!("n = {n} differs"));
            }
        }
        Ok(())
    });
    let result = result.and_then(|()| {
        if elapsed < Duration::from_secs(60) {
            Ok(format!("n <= 10 in {elapsed:?}"))
        } else {
            Err(format!("took {elapsed:?}"))
        }
    });
    report(6, "dynamic programme equals brute force", result);
}

#[test]
fn criterion_07_round_trips() {
    let result = (|| {
        for n in 1..=9 {
            for f in RgfIter::new(n) {
                let p = f.to_partition();
                let pi = prop0_forward(&p);
                if prop0_inverse(&pi).map_err(|e| e.to_string())? != p {
                    return Err(format!("prop0 at {p}"));
                }
                let g = alpha(&f);
                if beta(&g).map_err(|e| e.to_string())? != f {
                    return Err(format!("beta(alpha({f}))"));
                }
            }
            let t: Vec<RgfWord> = generate_t(n + 1).unwrap();
            let mut image: Vec<RgfWord> = RgfIter::new(n).map(|f| alpha(&f)).collect();
            image.sort();
            let mut t_sorted = t.clone();
            t_sorted.sort();
            if image != t_sorted {
                return Err(format!("alpha image is not T_{}", n + 1));
            }
            for g in &t {
                if &alpha(&beta(g).map_err(|e| e.to_string())?) != g {
                    return Err(format!("alpha(beta({g}))"));
                }
            }
            if n >= 3 {
                for pi in oracle_rsp(n - 2).unwrap().iter() {
                    for i in 1..=n - 2 {
                        let image = psi(i, pi).map_err(|e| e.to_string())?;
                        if psi_inverse(&image).map_err(|e| e.to_string())? != (i, pi.clone()) {
                            return Err(format!("psi({i}, {pi})"));
                        }
                    }
                }
            }
            for p in generate_separated(n).unwrap() {
                let pi = theta(&p).map_err(|e| e.to_string())?;
                if theta_inverse(&pi).map_err(|e| e.to_string())? != p {
                    return Err(format!("theta at {p}"));
                }
            }
        }
        Ok("prop0, alpha/beta, psi, theta at n <= 9".to_string())
    })();
    report(7, "bijections invert exhaustively", result);
}

fn text_cases() -> Vec<(&'static str, String, &'static str)> {
    let sp = |s: &str| s.parse::<SetPartition>().unwrap();
    let pm = |s: &str| s.parse::<Permutation>().unwrap();
    let rg = |s: &str| s.parse::<RgfWord>().unwrap();
    let set = |v: Vec<usize>| format!("{{{}}}", v.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
    vec![
        (
            "canonical form of 1,3,8/2/4,7/5,6",
            sp("1,3,8/2/4,7/5,6").canonical_form().to_string(),
            "1,2,1,3,4,4,3,1",
        ),
        (
            "prop0 of 1,4/2,5,8/3,7/6",
            prop0_forward(&sp("1,4/2,5,8/3,7/6")).to_string(),
            "1,5,2,6,9,3,8,4,7",
        ),
        (
            "prop0 inverse of 1,5,2,6,9,3,8,4,7",
            prop0_inverse(&pm("1,5,2,6,9,3,8,4,7")).unwrap().to_string(),
            "1,4/2,5,8/3,7/6",
        ),
        (
            "rlmin of 1,5,2,6,9,3,8,4,7",
            set(pm("1,5,2,6,9,3,8,4,7").rlmin_set()),
            "{1,2,3,4,7}",
        ),
        (
            "alpha of 1,2,1,3,1,2,4",
            alpha(&rg("1,2,1,3,1,2,4")).to_string(),
            "1,2,3,1,3,1,2,3",
        ),
        (
            "beta of 1,2,3,1,3,1,2,3",
            beta(&rg("1,2,3,1,3,1,2,3")).unwrap().to_string(),
            "1,2,1,3,1,2,4",
        ),
        (
            "psi(3, 1,3,5,2,4)",
            psi(3, &pm("1,3,5,2,4")).unwrap().to_string(),
            "1,3,6,2,7,4,5",
        ),
        (
            "psi inverse of 1,3,6,2,7,4,5",
            {
                let (i, pi) = psi_inverse(&pm("1,3,6,2,7,4,5")).unwrap();
                format!("({i}, {pi})")
            },
            "(3, 1,3,5,2,4)",
        ),
        (
            "flatten of 1,4,9/2,3,8/5,7/6",
            sp("1,4,9/2,3,8/5,7/6").flatten().to_string(),
            "1,4,9,2,3,8,5,7,6",
        ),
        (
            "rlmin of 1,4,9,2,3,8,5,7,6",
            set(pm("1,4,9,2,3,8,5,7,6").rlmin_set()),
            "{1,2,3,5,6}",
        ),
        (
            "lwmp of 1,2,2,1,3,4,3,2,1",
            set(rg("1,2,2,1,3,4,3,2,1").lwmp_positions()),
            "{1,2,3,5,6}",
        ),
        (
            "theta of 1,3,5,8/2,6/4,7",
            theta(&sp("1,3,5,8/2,6/4,7")).unwrap().to_string(),
            "1,3,5,6,8,2,7,4",
        ),
        (
            "theta inverse of 1,3,5,6,8,2,7,4",
            theta_inverse(&pm("1,3,5,6,8,2,7,4")).unwrap().to_string(),
            "1,3,5,8/2,6/4,7",
        ),
        (
            "theta inverse of 1,3,6,2,5,7,8,4",
            theta_inverse(&pm("1,3,6,2,5,7,8,4")).unwrap().to_string(),
            "1,3,6/2,5,8/4,7",
        ),
        (
            "beta of 1,2,2,1,3,4,3,2,1",
            beta(&rg("1,2,2,1,3,4,3,2,1")).unwrap().to_string(),
            "1,2,1,3,4,4,3,1",
        ),
        (
            "canonical_extend(3, 1,2,1,3,2)",
            canonical_extend(3, &rg("1,2,1,3,2")).unwrap().to_string(),
            "1,2,1,3,4,3,2",
        ),
        (
            "lrmax of 1,2,1,1,3,2,3,4,2",
            set(rg("1,2,1,1,3,2,3,4,2").lrmax_positions()),
            "{1,2,5,8}",
        ),
        (
            "lwmp of 1,2,1,1,3,2,3,4,2",
            set(rg("1,2,1,1,3,2,3,4,2").lwmp_positions()),
            "{1,2,5,7,8}",
        ),
    ]
}

#[test]
fn criterion_08_worked_examples() {
    let cases = text_cases();
    let bad: Vec<String> = cases
        .iter()
        .filter(|(_, got, want)| got != want)
        .map(|(what, got, want)| format!("{what}: {got} != {want}"))
        .collect();
    let result = if bad.is_empty() {
        Ok(format!("{} cases", cases.len()))
    } else {
        Err(bad.join("; "))
    };
    report(8, "worked examples through parse/display", result);
}

#[test]
fn criterion_09_noncrossing_counts() {
    let binom = binomials(12);
    let result = (|| {
        for n in 2..=12 {
            let family = generate_ncmf(n).unwrap();
            if family.len() != 1 << (n - 2) {
                return Err(format!("|family({n})| = {}", family.len()));
            }
            let mut hist = BTreeMap::<usize, usize>::new();
            for p in &family {
                *hist.entry(p.block_count()).or_default() += 1;
            }
            let poly = ncmf_polynomial(n).unwrap();
            for t in 1..=n {
                let c = hist.get(&t).copied().unwrap_or(0);
                let want = if 2 * (t - 1) <= n - 1 {
                    binom[n - 1][2 * (t - 1)].clone()
                } else {
                    BigUint::default()
                };
                if BigUint::from(c) != want || poly.get(t - 1).cloned().unwrap_or_default() != want {
                    return Err(format!("n = {n}, t = {t}: {c} vs {want}"));
                }
            }
        }
        Ok("n <= 12".to_string())
    })();
    report(9, "non-crossing merging-free family sizes and histogram", result);
}

#[test]
fn criterion_10_egf() {
    let result = (|| {
        let a = a_table(10);
        let rhs = egf_rhs(9, 5, 10).map_err(|e| e.to_string())?;
        for m in 0..=9 {
            for k in 0..=5 {
                for r in 0..=10 {
                    let want = BigRational::from_integer(BigInt::from(a.get(&[m + 1, k, r])));
                    if rhs.scaled_coeff([m, k, r]) != want {
                        return Err(format!("[x^{m} y^{k} z^{r}]"));
                    }
                }
            }
        }
        let bi = bivariate_rhs(9, 5).map_err(|e| e.to_string())?;
        if egf_rhs(9, 5, 10).unwrap().set_to_one(2) != bi {
            return Err("z = 1 specialisation".to_string());
        }
        let b = bell(10);
        let univariate = egf_rhs(9, 5, 10).unwrap().set_to_one(1).set_to_one(2);
        for m in 0..=9 {
            if univariate.scaled_coeff([m, 0, 0]) != BigRational::from_integer(BigInt::from(b.get(&[m]))) {
                return Err(format!("y = z = 1 coefficient {m}"));
            }
        }
        let bell_check = bell_egf_check(10).map_err(|e| e.to_string())?;
        if bell_check
            .iter()
            .enumerate()
            .any(|(m, c)| *c != BigInt::from(b.get(&[m])))
        {
            return Err("exp(e^x - 1) coefficients".to_string());
        }
        Ok("m <= 9 exact; both specialisations agree".to_string())
    })();
    report(10, "generating function coefficients", result);
}

#[test]
fn criterion_11_dobinski() {
    let r = r_table(10);
    let tol = BigRational::new(BigInt::one(), BigInt::from(1_000_000));
    let result = (|| {
        let mut worst = 0f64;
        for n in 1..=10 {
            let est = dobinski_estimate(n, 60).map_err(|e| e.to_string())?;
            let diff = est.abs_diff(&BigRational::from_integer(BigInt::from(r.row_sum(n))));
            if diff >= tol {
                return Err(format!("n = {n}: estimate {est}"));
            }
            worst = worst.max(diff.to_f64().unwrap_or(f64::NAN));
        }
        Ok(format!("max error {worst:.3e}"))
    })();
    report(11, "Dobinski estimate within 1e-6", result);
}

#[test]
fn criterion_12_structural_properties() {
    let result = (|| {
        for n in 1..=10 {
            for f in RgfIter::new(n) {
                if f.is_in_t() {
                    let pi = f.to_partition().flatten();
                    if pi.rlmin_set() != f.lwmp_positions() {
                        return Err(format!("rlmin vs lwmp at {f}"));
                    }
                    if f.avoids_212() != f.is_weakly_unimodal() {
                        return Err(format!("212 vs unimodal at {f}"));
                    }
                }
            }
            for pi in oracle_rsp(n).unwrap().iter() {
                if pi.run_count() > pi.rlmin_count() {
                    return Err(format!("runs > rlmin at {pi}"));
                }
                if pi.run_count() > ceil_half(n) {
                    return Err(format!("run bound at {pi}"));
                }
            }
        }
        Ok("n <= 10".to_string())
    })();
    report(12, "structural properties", result);
}

#[test]
fn criterion_13_l_sequence() {
    let l = l_sequence(10);
    let result = (|| {
        for n in 1..=10 {
            let brute = RgfIter::new(n)
                .map(|f| f.to_partition())
                .filter(|p| {
                    let blocks = p.blocks();
                    blocks[..blocks.len() - 1].iter().all(|b| b.len() >= 2)
                })
                .count();
            if l.get(&[n]) != BigUint::from(brute) {
                return Err(format!("l({n}) = {} vs {brute}", l.get(&[n])));
            }
        }
        Ok(format!("n <= 10, l(10) = {}", l.get(&[10])))
    })();
    report(13, "l-sequence matches brute force", result);
}
