use std::fs;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use injword::complex::{build_complex, verify_dd_zero, ChainComplex, IntValue};
use injword::filtration::{
    check_filtration_preserved, d1_top, decomposition_iso, e1_page, null_homotopy_identity, E1Page,
};
use injword::homology::{
    betti_table_from_forms, boundary_smith_forms, smith_normal_form, SmithForm,
};
use injword::words::Alphabet;
use injword::wreath::{
    conjugation_check, derangement_formula, fixed_point_free_count, intersection_count,
    is_transitive, stabilizer, FiniteGroup,
};
use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cache::SnfCache;
use crate::report::{Check, Report};

pub const MAX_N: usize = 6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error(transparent)]
    Core(#[from] injword::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Budget(_) | CliError::Core(injword::Error::BudgetExceeded { .. }) => 3,
            CliError::Usage(_) | CliError::Core(_) => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    File(PathBuf),
}

impl FromStr for GroupSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.split_once(':') {
            Some(("cyclic", k)) => match k.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(GroupSpec::Cyclic(k)),
                _ => Err(format!(
                    "cyclic order must be a positive integer, got {k:?}"
                )),
            },
            Some(("file", path)) if !path.is_empty() => Ok(GroupSpec::File(path.into())),
            _ => Err("expected cyclic:K or file:PATH".into()),
        }
    }
}

impl GroupSpec {
    pub fn load(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(k) => Ok(FiniteGroup::cyclic(*k)?),
            GroupSpec::File(path) => {
                let text = fs::read_to_string(path).map_err(|e| {
                    CliError::Usage(format!("cannot read group file {}: {e}", path.display()))
                })?;
                Ok(FiniteGroup::from_json(&text)?)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: Option<usize>,
    pub labels: Option<usize>,
    pub group: Option<GroupSpec>,
    pub letter: Option<u32>,
    pub cache: Option<PathBuf>,
    pub budget: u128,
}

impl RunConfig {
    fn n(&self) -> Result<usize> {
        let n = self
            .n
            .ok_or_else(|| CliError::Usage("--n is required".into()))?;
        if n > MAX_N {
            return Err(CliError::Budget(format!(
                "n = {n} is above the hard cap of {MAX_N}"
            )));
        }
        Ok(n)
    }

    /// The group named by `--group`, or `Z/ℓ` from `--labels`.
    fn group(&self) -> Result<FiniteGroup> {
        let g = match (&self.group, self.labels) {
            (Some(spec), _) => spec.load()?,
            (None, Some(l)) => FiniteGroup::cyclic(l)?,
            (None, None) => {
                return Err(CliError::Usage(
                    "one of --labels or --group is required".into(),
                ))
            }
        };
        if let Some(l) = self.labels.filter(|&l| l != g.order()) {
            return Err(CliError::Usage(format!(
                "--labels {l} disagrees with a group of order {}",
                g.order()
            )));
        }
        Ok(g)
    }

    fn labels(&self) -> Result<usize> {
        match (self.labels, &self.group) {
            (Some(l), None) => Ok(l),
            _ => self.group().map(|g| g.order()),
        }
    }

    fn cache(&self) -> Result<Option<SnfCache>> {
        self.cache
            .as_ref()
            .map(|dir| {
                SnfCache::open(dir).map_err(|e| {
                    CliError::Usage(format!("cannot open cache {}: {e}", dir.display()))
                })
            })
            .transpose()
    }
}

fn int(v: &BigInt) -> Value {
    serde_json::to_value(IntValue(v.clone())).expect("integers serialize")
}

fn signed_power(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_complex_budget(n: usize, labels: usize, budget: u128) -> Result<Alphabet> {
    let alpha = Alphabet::new(n, labels)?;
    let total = alpha.total_generators();
    if total > budget {
        return Err(CliError::Budget(format!(
            "the complex for n={n}, labels={labels} has {total} generators; the budget is {budget}"
        )));
    }
    Ok(alpha)
}

fn smith_forms(
    c: &ChainComplex,
    n: usize,
    labels: usize,
    cache: Option<&SnfCache>,
) -> Vec<SmithForm> {
    match cache {
        None => boundary_smith_forms(c),
        Some(cache) => c
            .degrees()
            .collect_vec()
            .par_iter()
            .map(|&r| cache.smith(n, labels, r, c.boundary(r).expect("degree in range")))
            .collect(),
    }
}

struct Section {
    checks: Vec<Check>,
    lines: Vec<String>,
    data: Value,
}

fn homology_section(
    n: usize,
    labels: usize,
    budget: u128,
    cache: Option<&SnfCache>,
) -> Result<Section> {
    let alpha = check_complex_budget(n, labels, budget)?;
    let c = build_complex(alpha);
    let forms = smith_forms(&c, n, labels, cache);
    let table = betti_table_from_forms(&c, &forms);
    let d = derangement_formula(labels, n);
    let chi = c.euler_characteristic();
    let top = &table[n];

    let mut checks: Vec<Check> = (0..n)
        .map(|r| Check::equal(format!("H_{r} vanishes"), "0", table[r].to_string()))
        .collect();
    checks.push(Check::equal(
        format!("H_{n} is torsion-free"),
        json!([]),
        json!(top.torsion.iter().map(int).collect_vec()),
    ));
    checks.push(Check::equal(
        format!("rank H_{n} equals d({labels})_{n}"),
        int(&d),
        top.free_rank,
    ));
    checks.push(Check::equal(
        format!("(-1)^{n} times the Euler characteristic equals d({labels})_{n}"),
        int(&d),
        signed_power(n) * chi,
    ));

    let betti = table.iter().map(ToString::to_string).collect_vec();
    let ranks = c.degrees().map(|r| c.rank_of(r)).collect_vec();
    let lines = vec![
        format!("rank C_r = {ranks:?}"),
        format!("H = [{}]", betti.join(", ")),
        format!("d({labels})_{n} = {d}"),
        format!("Euler characteristic = {chi}"),
    ];
    let data = json!({
        "chain_ranks": ranks,
        "homology": table,
        "derangement_number": int(&d),
        "euler_characteristic": chi,
    });
    Ok(Section {
        checks,
        lines,
        data,
    })
}

fn render_e1(page: &E1Page) -> Vec<String> {
    let n = page.n;
    let cells = |q: usize| {
        (0..=n).map(move |p| {
            if p + q <= n {
                page.get(p as i64, q as i64).to_string()
            } else {
                ".".into()
            }
        })
    };
    let width = (0..=n).flat_map(cells).map(|s| s.len()).max().unwrap_or(1);
    let mut lines = vec![format!("E1 page (rows q = {n}..0, columns p = 0..{n})")];
    for q in (0..=n).rev() {
        lines.push(format!(
            "q={q} | {}",
            cells(q).map(|s| format!("{s:>width$}")).join(" ")
        ));
    }
    lines
}

fn spectral_section(n: usize, labels: usize, a: u32, budget: u128) -> Result<Section> {
    if n == 0 {
        return Err(CliError::Usage("the filtration needs n >= 1".into()));
    }
    if !(1..=n as u32).contains(&a) {
        return Err(CliError::Usage(format!("letter {a} is not in 1..={n}")));
    }
    let alpha = check_complex_budget(n, labels, budget)?;
    let c = build_complex(alpha);
    let mut checks = Vec::new();

    let violation = check_filtration_preserved(&c, a)?.err();
    checks.push(Check::witnessed(
        "the differential preserves the filtration",
        violation.map(|v| format!("{} has face {} of higher level", v.word, v.face)),
    ));
    let mut decompositions = Vec::new();
    for p in 1..=n {
        let rep = decomposition_iso(&c, a, p)?;
        let witness = (!rep.verified).then(|| {
            rep.counterexample
                .clone()
                .unwrap_or_else(|| "no bijection".into())
        });
        checks.push(Check::witnessed(
            format!(
                "F_{p}/F_{} splits into {} shifted copies of the complex on {} letters",
                p - 1,
                rep.expected_summand_count,
                n - 1
            ),
            witness,
        ));
        decompositions.push(rep);
    }

    let page = e1_page(&c, a)?;
    checks.push(Check::holds(
        format!("E1_(0,q) = 0 for q < {}", n - 1),
        page.column_zero_vanishes(),
    ));
    checks.push(Check::holds(
        "E1_(p,q) = 0 for p >= 1 and p + q < n",
        page.positive_columns_vanish(),
    ));

    let d1 = d1_top(&c, a)?;
    checks.push(Check::holds(
        "d1 is the identity on each summand",
        d1.identity_on_summands(),
    ));
    checks.push(Check::equal(
        format!("E2_(0,{}) = coker d1", n - 1),
        "0",
        d1.cokernel.to_string(),
    ));

    let homotopy = null_homotopy_identity(alpha, a)?;
    let bad = homotopy
        .iter()
        .find(|h| !h.holds)
        .map(|h| format!("fails in degree {}", h.degree));
    checks.push(Check::witnessed("d s + s d is the inclusion of F_0", bad));

    let mut lines = render_e1(&page);
    if d1.matrix.len() <= 8 && d1.matrix.first().map_or(0, Vec::len) <= 8 {
        let mut rows = d1
            .matrix
            .iter()
            .map(|row| format!("[{}]", row.iter().map(|v| v.0.to_string()).join(", ")));
        lines.push(format!("d1 = [{}]", rows.join(", ")));
    } else {
        lines.push(format!("d1 is {} x {}", d1.target_rank, d1.source_rank));
    }
    lines.push(format!("E2_(0,{}) = {}", n - 1, d1.cokernel));
    let data = json!({
        "letter": a,
        "e1": page,
        "d1": d1,
        "decompositions": decompositions,
        "null_homotopy": homotopy,
    });
    Ok(Section {
        checks,
        lines,
        data,
    })
}

fn wreath_section(group: &FiniteGroup, n: usize, budget: u128) -> Result<Section> {
    let l = group.order();
    let count = fixed_point_free_count(group, n, budget)?;
    let d = derangement_formula(l, n);
    let mut checks = vec![Check::equal(
        format!("fixed-point-free elements of G_{n} number d({l})_{n}"),
        int(&d),
        int(&BigInt::from(count)),
    )];

    let subsets: Vec<Vec<u32>> = if n <= 4 {
        (1..=n)
            .flat_map(|i| (1..=n as u32).combinations(i))
            .collect()
    } else {
        (1..=n).map(|i| (1..=i as u32).collect()).collect()
    };
    for s in &subsets {
        let ic = intersection_count(l, n, s)?;
        checks.push(Check::equal(
            format!(
                "elements fixing {s:?} with trivial labels there number {}! * {l}^{}",
                n - s.len(),
                n - s.len()
            ),
            int(&BigInt::from(ic.formula)),
            int(&BigInt::from(ic.enumerated)),
        ));
    }
    for r in 0..=n {
        checks.push(Check::holds(
            format!("G_{n} acts transitively on words of length {r}"),
            is_transitive(group, n, r)?,
        ));
        let stab = stabilizer(group, n, r)?;
        checks.push(Check::holds(
            format!("the stabilizer of x_{r} is G_{}", n - r),
            stab.holds(),
        ));
        for i in 1..=r {
            let rep = conjugation_check(group, n, r, i)?;
            let witness = (!rep.holds()).then(|| {
                rep.witness
                    .clone()
                    .unwrap_or_else(|| "t does not centralize".into())
            });
            checks.push(Check::witnessed(
                format!(
                    "t carries d_{}(x_{r}) to x_{} and centralizes the stabilizer",
                    i - 1,
                    r - 1
                ),
                witness,
            ));
        }
    }
    let lines = vec![
        format!(
            "|G| = {l}, |G_{n}| = {}",
            BigInt::from(l).pow(n as u32) * (1..=n).map(BigInt::from).product::<BigInt>()
        ),
        format!("fixed-point-free elements: {count}"),
        format!("d({l})_{n} = {d}"),
    ];
    let data = json!({ "group_order": l, "fixed_point_free": int(&BigInt::from(count)), "derangement_number": int(&d) });
    Ok(Section {
        checks,
        lines,
        data,
    })
}

fn finish(mut report: Report, section: Section) -> Report {
    for c in section.checks {
        report.push(c);
    }
    report.lines = section.lines;
    report.data = section.data;
    report
}

pub fn cmd_homology(cfg: &RunConfig) -> Result<Report> {
    let n = cfg.n()?;
    let l = cfg.labels()?;
    let cache = cfg.cache()?;
    let section = homology_section(n, l, cfg.budget, cache.as_ref())?;
    let mut report = finish(
        Report::new("homology", json!({ "n": n, "labels": l })),
        section,
    );
    if let Some(cache) = cache {
        report.data["cache"] = json!(cache.stats());
    }
    Ok(report)
}

pub fn cmd_spectral(cfg: &RunConfig) -> Result<Report> {
    let n = cfg.n()?;
    let l = cfg.labels()?;
    let a = cfg.letter.unwrap_or(n as u32);
    let section = spectral_section(n, l, a, cfg.budget)?;
    Ok(finish(
        Report::new("spectral", json!({ "n": n, "labels": l, "letter": a })),
        section,
    ))
}

pub fn cmd_wreath(cfg: &RunConfig) -> Result<Report> {
    let n = cfg.n()?;
    let group = cfg.group()?;
    let section = wreath_section(&group, n, cfg.budget)?;
    Ok(finish(
        Report::new("wreath", json!({ "n": n, "group_order": group.order() })),
        section,
    ))
}

/// Every suite over the grid `1 ≤ n ≤ N`, `1 ≤ ℓ ≤ L`.
pub fn cmd_verify(cfg: &RunConfig) -> Result<Report> {
    let max_n = cfg.n.unwrap_or(4);
    let max_l = cfg.labels.unwrap_or(2);
    if max_n > MAX_N {
        return Err(CliError::Budget(format!(
            "n = {max_n} is above the hard cap of {MAX_N}"
        )));
    }
    let cache = cfg.cache()?;
    let start = Instant::now();
    let mut report = Report::new("verify", json!({ "max_n": max_n, "max_labels": max_l }));
    report.show_passing = false;
    let mut cells = Vec::new();
    for n in 1..=max_n {
        for l in 1..=max_l {
            check_complex_budget(n, l, cfg.budget)?;
        }
    }
    for n in 1..=max_n {
        for l in 1..=max_l {
            let cell_start = Instant::now();
            let mut checks = Vec::new();
            let c = build_complex(Alphabet::new(n, l)?);
            checks.push(Check::holds("d d = 0", verify_dd_zero(&c)));
            if let Some(cache) = &cache {
                let direct = boundary_smith_forms(&c)
                    .into_iter()
                    .map(|f| f.diag)
                    .collect_vec();
                let cached = smith_forms(&c, n, l, Some(cache))
                    .into_iter()
                    .map(|f| f.diag)
                    .collect_vec();
                checks.push(Check::holds(
                    "cached Smith forms match direct reduction",
                    direct == cached,
                ));
            }
            let forms_ok = c.degrees().all(|r| {
                let d = c.boundary(r).expect("degree in range");
                d.rows() * d.cols() > 4096 || {
                    let f = smith_normal_form(d, true);
                    f.verify_transforms(d) && f.divisibility_chain_holds()
                }
            });
            checks.push(Check::holds(
                "U D V = diag with unimodular U, V for boundaries up to 4096 entries",
                forms_ok,
            ));
            checks.extend(homology_section(n, l, cfg.budget, cache.as_ref())?.checks);
            for a in 1..=n as u32 {
                let spectral = spectral_section(n, l, a, cfg.budget)?;
                checks.extend(spectral.checks.into_iter().map(|mut c| {
                    c.name = format!("letter {a}: {}", c.name);
                    c
                }));
            }
            checks.extend(wreath_section(&FiniteGroup::cyclic(l)?, n, cfg.budget)?.checks);
            let total = checks.len();
            let passed = checks.iter().filter(|c| c.pass).count();
            let secs = cell_start.elapsed().as_secs_f64();
            report.line(format!(
                "n={n} labels={l}: {passed}/{total} checks pass ({secs:.2}s)"
            ));
            cells.push(
                json!({ "n": n, "labels": l, "checks": total, "passed": passed, "seconds": secs }),
            );
            for mut c in checks {
                c.name = format!("n={n} labels={l}: {}", c.name);
                report.push(c);
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if let Some(f) = report.first_failure() {
        let line = format!(
            "first failure: {} (expected {}, got {})",
            f.name, f.expected, f.actual
        );
        report.line(line);
    }
    report.line(format!("{} checks in {secs:.2}s", report.checks.len()));
    report.data = json!({ "grid": cells, "seconds": secs });
    if let Some(cache) = cache {
        report.data["cache"] = json!(cache.stats());
    }
    Ok(report)
}
