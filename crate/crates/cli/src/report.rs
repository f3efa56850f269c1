//! End-to-end report: constructs a spectrum-free automorphism, tabulates
//! commutator lattice indices, lifts the matrix to a free-group substitution,
//! lists lower central series witnesses in the wreath product, and checks
//! random kernel words for consistency between the Fox-derivative criterion
//! and evaluation in the wreath product. Every verdict is recomputed on each
//! run; nothing is cached or asserted away.

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use relfree::grpext::{eval_in_wreath, lcs_witness};
use relfree::intlinalg::IntMatrix;
use relfree::lift::lift_matrix;
use relfree::metabelian::is_trivial;
use relfree::spectra::{commutator_lattice_index, is_quasi_unipotent, spectrum_free_automorphism};
use relfree::words::{Letter, Word};

/// Inputs of a report run. Identical parameters give byte-identical output.
#[derive(Clone, Debug)]
pub struct ReportParams {
    pub n: usize,
    pub p: u64,
    pub depth: i64,
    pub m_max: i64,
    pub k_max: i64,
    pub samples: usize,
    pub seed: u64,
}

impl ReportParams {
    pub fn new(n: usize, p: u64, depth: i64) -> Self {
        ReportParams {
            n,
            p,
            depth,
            m_max: 3,
            k_max: 6,
            samples: 12,
            seed: 7,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.n < 2 {
            return Err(format!(
                "n must be at least 2: a rank-1 group is abelian, every check below is vacuous (got n = {})",
                self.n
            ));
        }
        if !is_prime(self.p) {
            return Err(format!("p must be prime, got {}", self.p));
        }
        if self.depth < 1 {
            return Err(format!("depth must be at least 1, got {}", self.depth));
        }
        if self.m_max < 1 || self.k_max < 1 {
            return Err(format!(
                "index table bounds must be at least 1, got m_max = {}, k_max = {}",
                self.m_max, self.k_max
            ));
        }
        if self.samples < 1 {
            return Err("samples must be at least 1".to_string());
        }
        Ok(())
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// One verified block of the report. `pass` is computed from the data in the
/// same run that produced it.
#[derive(Clone, Debug)]
pub struct Section {
    pub name: &'static str,
    pub pass: bool,
    pub data: Value,
    pub lines: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct SkeletonReport {
    pub params: ReportParams,
    pub sections: Vec<Section>,
    pub pass: bool,
}

impl SkeletonReport {
    pub fn build(params: &ReportParams) -> Result<SkeletonReport, String> {
        params.validate()?;
        let phi = spectrum_free_automorphism(params.n).map_err(|e| e.to_string())?;
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        let sections = vec![
            automorphism_section(&phi),
            index_table_section(&phi, params.m_max, params.k_max)?,
            lift_section(&phi, params.samples, &mut rng)?,
            wreath_section(params.p, params.depth)?,
            kernel_section(params.p, params.samples, &mut rng)?,
        ];
        let pass = sections.iter().all(|s| s.pass);
        Ok(SkeletonReport {
            params: params.clone(),
            sections,
            pass,
        })
    }

    pub fn to_json(&self) -> Value {
        let sections: Vec<Value> = self
            .sections
            .iter()
            .map(|s| json!({ "name": s.name, "pass": s.pass, "data": s.data }))
            .collect();
        json!({
            "tool": { "name": "relfree", "version": env!("CARGO_PKG_VERSION") },
            "parameters": {
                "n": self.params.n,
                "p": self.params.p,
                "depth": self.params.depth,
                "m_max": self.params.m_max,
                "k_max": self.params.k_max,
                "samples": self.params.samples,
                "seed": self.params.seed,
            },
            "sections": sections,
            "pass": self.pass,
        })
    }

    pub fn render(&self, width: usize) -> String {
        let p = &self.params;
        let mut out = Vec::new();
        out.push(format!(
            "proof skeleton: {}",
            if self.pass { "PASS" } else { "FAIL" }
        ));
        out.push(format!(
            "parameters: n={} p={} depth={} m_max={} k_max={} samples={} seed={}",
            p.n, p.p, p.depth, p.m_max, p.k_max, p.samples, p.seed
        ));
        for section in &self.sections {
            out.push(String::new());
            out.push(format!(
                "[{}] {}",
                if section.pass { "PASS" } else { "FAIL" },
                section.name
            ));
            for line in &section.lines {
                push_wrapped(&mut out, line, "  ", width);
            }
        }
        out.push(String::new());
        let mut wrapped = Vec::new();
        for line in out.drain(..) {
            if line.len() <= width || line.starts_with(' ') {
                wrapped.push(line);
            } else {
                push_wrapped(&mut wrapped, &line, "", width);
            }
        }
        wrapped.join("\n")
    }
}

/// Greedy wrap at `width` columns; continuation lines get four extra spaces
/// of indentation beyond `indent`.
fn push_wrapped(out: &mut Vec<String>, line: &str, indent: &str, width: usize) {
    let full = format!("{indent}{line}");
    if full.len() <= width {
        out.push(full);
        return;
    }
    let cont = format!("{indent}    ");
    let mut current = String::new();
    for piece in line.split_whitespace() {
        if current.is_empty() {
            current = format!("{indent}{piece}");
        } else if current.len() + 1 + piece.len() <= width {
            current.push(' ');
            current.push_str(piece);
        } else {
            out.push(std::mem::take(&mut current));
            current = format!("{cont}{piece}");
        }
    }
    if !current.is_empty() {
        out.push(current);
    }
}

fn automorphism_section(phi: &IntMatrix) -> Section {
    let det = phi.determinant();
    let char_poly = phi.char_poly();
    let spectrum = is_quasi_unipotent(phi);
    let pass = det.abs() == BigInt::from(1) && !spectrum.quasi_unipotent;
    let mut lines = vec!["matrix:".to_string()];
    lines.extend(phi.to_string().lines().map(|row| format!("  {row}")));
    lines.push(format!("char poly: {char_poly}"));
    lines.push(format!("determinant: {det}"));
    lines.push(format!("quasi-unipotent: {}", spectrum.quasi_unipotent));
    Section {
        name: "automorphism",
        pass,
        data: json!({
            "matrix": phi.to_json(),
            "char_poly": char_poly.to_string(),
            "determinant": det.to_string(),
            "spectrum": spectrum.to_json(),
        }),
        lines,
    }
}

fn index_table_section(phi: &IntMatrix, m_max: i64, k_max: i64) -> Result<Section, String> {
    let mut entries = Vec::new();
    let mut lines = Vec::new();
    let mut all_finite = true;
    for m in 1..=m_max {
        let mut row = format!("m={m}:");
        for k in 1..=k_max {
            let index = commutator_lattice_index(phi, m, k).map_err(|e| e.to_string())?;
            all_finite &= index.is_finite();
            row.push_str(&format!(" {index}"));
            entries.push(json!({ "m": m, "k": k, "index": index.to_string() }));
        }
        lines.push(row);
    }
    lines.push(format!("all indices finite: {all_finite}"));
    Ok(Section {
        name: "index table",
        pass: all_finite,
        data: json!({ "entries": entries }),
        lines,
    })
}

fn lift_section(phi: &IntMatrix, samples: usize, rng: &mut ChaCha8Rng) -> Result<Section, String> {
    let lifted = lift_matrix(phi).map_err(|e| e.to_string())?;
    let ab_ok = &lifted.abelianization_matrix() == phi;
    let n = phi.rank();
    let mut failures = 0usize;
    for _ in 0..samples {
        let w = random_word(rng, n, 8);
        let image = lifted.apply(&w).map_err(|e| e.to_string())?;
        if to_bigints(&image.abelianize()) != phi.mul_vec(&to_bigints(&w.abelianize())) {
            failures += 1;
        }
    }
    let pass = ab_ok && failures == 0;
    let mut lines = Vec::new();
    for (i, image) in lifted.images().iter().enumerate() {
        let shown = if image.is_identity() {
            "1".to_string()
        } else {
            image.to_string()
        };
        lines.push(format!("x{} -> {shown}", i + 1));
    }
    lines.push(format!("abelianizes back to the input: {ab_ok}"));
    lines.push(format!(
        "functoriality on {samples} random words: {failures} failures"
    ));
    Ok(Section {
        name: "lifted endomorphism",
        pass,
        data: json!({
            "images": lifted.to_json(),
            "abelianization_matches": ab_ok,
            "samples": samples,
            "failures": failures,
        }),
        lines,
    })
}

fn wreath_section(p: u64, depth: i64) -> Result<Section, String> {
    let mut entries = Vec::new();
    let mut lines = Vec::new();
    let mut all_nontrivial = true;
    for c in 1..=depth {
        let w = lcs_witness(p, c).map_err(|e| e.to_string())?;
        all_nontrivial &= !w.is_identity();
        entries.push(json!({ "depth": c, "element": w.to_json() }));
        lines.push(format!("depth {c}: {w}"));
    }
    lines.push(format!("all witnesses nontrivial: {all_nontrivial}"));
    Ok(Section {
        name: "wreath witnesses",
        pass: all_nontrivial,
        data: json!({ "entries": entries }),
        lines,
    })
}

fn kernel_section(p: u64, samples: usize, rng: &mut ChaCha8Rng) -> Result<Section, String> {
    let mut entries = Vec::new();
    let mut lines = Vec::new();
    let mut pass = true;
    for i in 0..samples {
        let w = random_kernel_word(rng, p);
        let verdict = is_trivial(&w, p).map_err(|e| e.to_string())?;
        let image = eval_in_wreath(&w, p).map_err(|e| e.to_string())?;
        let ok = verdict.in_subgroup && image.is_identity();
        pass &= ok;
        entries.push(json!({
            "length": w.len(),
            "trivial": verdict.in_subgroup,
            "wreath_identity": image.is_identity(),
        }));
        lines.push(format!(
            "sample {}: length {}, trivial mod {p}: {}, wreath identity: {}",
            i + 1,
            w.len(),
            verdict.in_subgroup,
            image.is_identity()
        ));
    }
    Ok(Section {
        name: "kernel consistency",
        pass,
        data: json!({ "entries": entries }),
        lines,
    })
}

fn to_bigints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

fn random_word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=(max_len as u32)) as usize;
    let letters = (0..len).map(|_| {
        let generator = rng.gen_range(1..=(rank as u32)) as usize;
        Letter::new(generator, rng.gen_bool(0.5))
    });
    Word::from_letters(rank, letters).expect("generators stay in range")
}

/// A random element of the kernel of the rank-2 free group onto its free
/// metabelian quotient of exponent `p`: a product of conjugates of p-th
/// powers of commutators and of commutators of commutators. Factors that
/// freely cancel to nothing are redrawn so the samples stay informative.
fn random_kernel_word(rng: &mut ChaCha8Rng, p: u64) -> Word {
    let factors = rng.gen_range(1u32..=3);
    let mut acc = Word::identity(2);
    for _ in 0..factors {
        let mut base = Word::identity(2);
        for _ in 0..8 {
            let u = random_word(rng, 2, 4);
            let v = random_word(rng, 2, 4);
            base = if rng.gen_bool(0.5) {
                u.commutator(&v).unwrap().pow(p as i64)
            } else {
                let s = random_word(rng, 2, 4);
                let t = random_word(rng, 2, 4);
                u.commutator(&v)
                    .unwrap()
                    .commutator(&s.commutator(&t).unwrap())
                    .unwrap()
            };
            if !base.is_identity() {
                break;
            }
        }
        let g = random_word(rng, 2, 3);
        acc = acc.concat(&base.conjugated_by(&g).unwrap()).unwrap();
    }
    acc
}
