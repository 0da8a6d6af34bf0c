//! Acceptance criteria. Every check is exact integer arithmetic; there are no
//! tolerances. Prints one PASS/FAIL line per criterion and exits nonzero if
//! any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use injword::complex::{build_complex, verify_dd_zero, ChainComplex};
use injword::filtration::{
    check_filtration_preserved, d1_top, decomposition_iso, e1_page, filtered_subcomplex,
    graded_quotient, null_homotopy_identity,
};
use injword::homology::{
    betti_table, betti_table_from_forms, boundary_smith_forms, smith_normal_form,
};
use injword::words::{words_over, Alphabet, LabeledWord};
use injword::wreath::{
    basepoint, conjugation_check, derangement_formula, elements, fixed_point_free_count,
    intersection_count, is_transitive, stabilizer, FiniteGroup, DEFAULT_BUDGET,
};
use itertools::Itertools;
use num_bigint::BigInt;

type Outcome = Result<String, String>;
type Criterion = (u8, &'static str, fn() -> Outcome);

/// (n, ℓ) pairs of criteria 1 and 2.
fn main_grid() -> Vec<(usize, usize)> {
    let mut grid: Vec<(usize, usize)> = (1..=5).cartesian_product(1..=2).collect();
    grid.extend((1..=4).map(|n| (n, 3)));
    grid
}

fn alpha(n: usize, l: usize) -> Alphabet {
    Alphabet::new(n, l).expect("labels >= 1")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn vanishing() -> Outcome {
    for (n, l) in main_grid() {
        let table = betti_table(&build_complex(alpha(n, l)));
        if let Some(r) = (0..n).find(|&r| !table[r].is_zero()) {
            return Err(format!("n={n} l={l}: H_{r} = {}", table[r]));
        }
    }
    Ok(format!(
        "{} complexes, H_r = 0 for all r < n",
        main_grid().len()
    ))
}

fn top_rank() -> Outcome {
    // independent anchors: brute-force fixed-point-free counts in G_n
    let anchors = [
        ((2, 1), 1u128),
        ((3, 1), 2),
        ((4, 1), 9),
        ((2, 2), 5),
        ((3, 2), 29),
    ];
    for ((n, l), expected) in anchors {
        let g = FiniteGroup::cyclic(l).map_err(|e| e.to_string())?;
        let counted = fixed_point_free_count(&g, n, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(counted == expected, || {
            format!("anchor n={n} l={l}: enumerated {counted}, expected {expected}")
        })?;
    }
    for (n, l) in main_grid() {
        let c = build_complex(alpha(n, l));
        let top = &betti_table(&c)[n];
        let formula = derangement_formula(l, n);
        let chi = c.euler_characteristic();
        let predicted = if n % 2 == 0 { chi } else { -chi };
        ensure(top.is_free(), || {
            format!("n={n} l={l}: H_n has torsion {top}")
        })?;
        ensure(BigInt::from(top.free_rank) == formula, || {
            format!(
                "n={n} l={l}: rank H_n = {} but d(l)_n = {formula}",
                top.free_rank
            )
        })?;
        ensure(BigInt::from(predicted) == formula, || {
            format!("n={n} l={l}: Euler prediction {predicted}")
        })?;
        if let Some((_, expected)) = anchors.iter().find(|(k, _)| *k == (n, l)) {
            ensure(top.free_rank as u128 == *expected, || {
                format!("n={n} l={l}: anchor mismatch")
            })?;
        }
    }
    Ok("H_n free of rank d(l)_n = (-1)^n chi; anchors 1, 2, 9, 5, 29".into())
}

fn three_way() -> Outcome {
    for n in 0..=4 {
        for l in 1..=3 {
            let rank = betti_table(&build_complex(alpha(n, l)))[n].free_rank;
            let formula = derangement_formula(l, n);
            let g = FiniteGroup::cyclic(l).map_err(|e| e.to_string())?;
            let count = fixed_point_free_count(&g, n, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            ensure(
                BigInt::from(rank) == formula && BigInt::from(count) == formula,
                || format!("n={n} l={l}: rank {rank}, formula {formula}, count {count}"),
            )?;
        }
    }
    Ok("rank H_n = d(l)_n = #fixed-point-free for n <= 4, l <= 3".into())
}

fn proof_steps() -> Outcome {
    let mut cases = 0;
    for n in 1..=4 {
        for l in 1..=2 {
            let c = build_complex(alpha(n, l));
            for a in 1..=n as u32 {
                cases += 1;
                let tag = format!("n={n} l={l} a={a}");
                check_filtration_preserved(&c, a)
                    .map_err(|e| e.to_string())?
                    .map_err(|v| {
                        format!("{tag}: (i) {} has face {} of higher level", v.word, v.face)
                    })?;
                for p in 1..=n {
                    let rep = decomposition_iso(&c, a, p).map_err(|e| e.to_string())?;
                    ensure(rep.verified, || {
                        format!("{tag} p={p}: (ii) {:?}", rep.counterexample)
                    })?;
                }
                let page = e1_page(&c, a).map_err(|e| e.to_string())?;
                ensure(
                    page.column_zero_vanishes() && page.positive_columns_vanish(),
                    || format!("{tag}: (iii) E1 vanishing lines fail"),
                )?;
                let d1 = d1_top(&c, a).map_err(|e| e.to_string())?;
                ensure(
                    d1.identity_on_summands() && d1.surjective && d1.cokernel.is_zero(),
                    || format!("{tag}: (iv) d1 {:?}", d1),
                )?;
                let homotopy = null_homotopy_identity(alpha(n, l), a).map_err(|e| e.to_string())?;
                ensure(homotopy.iter().all(|h| h.holds), || {
                    format!("{tag}: (v) d s + s d != inclusion")
                })?;
            }
        }
    }
    Ok(format!("(i)-(v) hold for {cases} (n, l, a) cases"))
}

fn structural() -> Outcome {
    // d∘d = 0 on complexes and on the filtration pieces built from them
    for n in 0..=4 {
        for l in 1..=3 {
            let c = build_complex(alpha(n, l));
            ensure(verify_dd_zero(&c), || format!("dd != 0 for n={n} l={l}"))?;
            if l <= 2 && n >= 1 {
                let derived: Vec<ChainComplex> = (0..=n)
                    .map(|p| filtered_subcomplex(&c, 1, p))
                    .chain((1..=n).map(|p| graded_quotient(&c, 1, p)))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
                ensure(derived.iter().all(verify_dd_zero), || {
                    format!("dd != 0 on a filtration piece n={n} l={l}")
                })?;
            }
            let forms = boundary_smith_forms(&c);
            ensure(forms.iter().all(|f| f.divisibility_chain_holds()), || {
                format!("chain fails n={n} l={l}")
            })?;
            ensure(
                betti_table_from_forms(&c, &forms) == betti_table(&c),
                || "form reuse mismatch".into(),
            )?;
        }
    }
    for (n, l) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
        let c = build_complex(alpha(n, l));
        for r in 1..=n {
            let d = c.boundary(r).expect("in range");
            let form = smith_normal_form(d, true);
            ensure(
                form.divisibility_chain_holds() && form.verify_transforms(d),
                || format!("U M V != diag for D_{r}, n={n} l={l}"),
            )?;
        }
    }
    // face identities on every word of length <= 4
    for r in 0..=4 {
        for w in words_over(&[1, 2, 3, 4], 2, r) {
            for j in 0..r {
                for i in 0..j {
                    let lhs = w
                        .face(j)
                        .and_then(|x| x.face(i))
                        .map_err(|e| e.to_string())?;
                    let rhs = w
                        .face(i)
                        .and_then(|x| x.face(j - 1))
                        .map_err(|e| e.to_string())?;
                    ensure(lhs == rhs, || {
                        format!("face identity fails on {w} (i={i}, j={j})")
                    })?;
                }
            }
        }
    }
    // wreath action laws, equivariance, transitivity
    let g = FiniteGroup::cyclic(2).map_err(|e| e.to_string())?;
    for n in 0..=3 {
        let all: Vec<_> = elements(n, &g).collect();
        let letters: Vec<u32> = (1..=n as u32).collect();
        let words: Vec<LabeledWord> = (0..=n).flat_map(|r| words_over(&letters, 2, r)).collect();
        for u in &all {
            for w in &words {
                let uw = u.act_on_word(&g, w).map_err(|e| e.to_string())?;
                for j in 0..w.len() {
                    let lhs = u
                        .act_on_word(&g, &w.face(j).map_err(|e| e.to_string())?)
                        .map_err(|e| e.to_string())?;
                    ensure(lhs == uw.face(j).map_err(|e| e.to_string())?, || {
                        format!("equivariance fails at {w}")
                    })?;
                }
            }
            for v in &all {
                let uv = u.multiply(v, &g).map_err(|e| e.to_string())?;
                for w in &words {
                    let lhs = uv.act_on_word(&g, w).map_err(|e| e.to_string())?;
                    let rhs = u
                        .act_on_word(&g, &v.act_on_word(&g, w).map_err(|e| e.to_string())?)
                        .map_err(|e| e.to_string())?;
                    ensure(lhs == rhs, || format!("action law fails at {w}"))?;
                }
            }
        }
    }
    for n in 1..=4 {
        for r in 0..=n {
            ensure(is_transitive(&g, n, r).map_err(|e| e.to_string())?, || {
                format!("not transitive n={n} r={r}")
            })?;
            let stab = stabilizer(&g, n, r).map_err(|e| e.to_string())?;
            ensure(stab.holds(), || {
                format!("Stab(x_{r}) != G_{} for n={n}", n - r)
            })?;
            for i in 1..=r {
                let rep = conjugation_check(&g, n, r, i).map_err(|e| e.to_string())?;
                ensure(rep.holds(), || {
                    format!("conjugation n={n} r={r} i={i}: {:?}", rep.witness)
                })?;
            }
        }
        ensure(
            basepoint(n, 0).map_err(|e| e.to_string())?.is_empty(),
            || "x_0 is not empty".into(),
        )?;
    }
    Ok("dd = 0, SNF chains and transforms, face identities, action laws, equivariance, orbit-stabilizer, conjugation".into())
}

fn inclusion_exclusion() -> Outcome {
    let mut subsets = 0;
    for n in 1..=4 {
        for l in 1..=3 {
            for size in 1..=n {
                for subset in (1..=n as u32).combinations(size) {
                    let count = intersection_count(l, n, &subset).map_err(|e| e.to_string())?;
                    subsets += 1;
                    ensure(count.holds(), || {
                        format!(
                            "n={n} l={l} {subset:?}: enumerated {} vs {}",
                            count.enumerated, count.formula
                        )
                    })?;
                }
            }
        }
    }
    Ok(format!("{subsets} subsets match (n-i)! l^(n-i)"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        (1, "vanishing below the top degree", vanishing),
        (2, "top rank is d(l)_n", top_rank),
        (3, "three-way agreement", three_way),
        (4, "filtration argument, step by step", proof_steps),
        (5, "structural suites", structural),
        (6, "inclusion-exclusion intersections", inclusion_exclusion),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] criterion {id}: {name}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {id}: {name}: {why} ({secs:.2}s)");
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
