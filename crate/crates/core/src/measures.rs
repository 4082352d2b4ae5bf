//! Sample spaces, measures, random variables, the expectation pairing, and
//! file I/O.
//!
//! Everything is immutable after construction, so values can be shared and
//! used concurrently without synchronization. Spaces are held behind an
//! [`Arc`]; two values interoperate when they point at the same space or at
//! spaces with identical label lists.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for "total mass equals 1".
pub const MASS_TOL: f64 = 1e-12;

/// Finite ordered set of distinct outcome labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleSpace {
    labels: Vec<String>,
}

impl SampleSpace {
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptySpace);
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Arc::new(Self { labels }))
    }

    /// Space with labels `"0".."n-1"`.
    pub fn indexed(n: usize) -> Arc<Self> {
        Self::new((0..n).map(|i| i.to_string())).expect("indexed labels are distinct")
    }

    /// Product space with labels paired row-major: outcome `(i, j)` sits at
    /// flat index `i * b.len() + j`.
    pub fn product(a: &Arc<Self>, b: &Arc<Self>) -> Result<Arc<Self>> {
        let mut labels = Vec::with_capacity(a.len() * b.len());
        for la in &a.labels {
            for lb in &b.labels {
                labels.push(format!("{la}⊗{lb}"));
            }
        }
        Self::new(labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 1 by construction
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// True when the two handles denote the same space.
pub fn same_space(a: &Arc<SampleSpace>, b: &Arc<SampleSpace>) -> bool {
    Arc::ptr_eq(a, b) || a.labels == b.labels
}

/// Nonnegative weight vector over a sample space; mass need not be 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Measure {
    space: Arc<SampleSpace>,
    weights: Vec<f64>,
}

impl Measure {
    pub fn new(space: Arc<SampleSpace>, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != space.len() {
            return Err(Error::DimensionMismatch {
                expected: space.len(),
                got: weights.len(),
            });
        }
        for (w, l) in weights.iter().zip(space.labels()) {
            if !w.is_finite() {
                return Err(Error::NonFiniteEntry { label: l.clone() });
            }
            if *w < 0.0 {
                return Err(Error::NegativeWeight {
                    label: l.clone(),
                    value: *w,
                });
            }
        }
        Ok(Self { space, weights })
    }

    pub fn zero(space: Arc<SampleSpace>) -> Self {
        let n = space.len();
        Self {
            space,
            weights: vec![0.0; n],
        }
    }

    pub fn space(&self) -> &Arc<SampleSpace> {
        &self.space
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Divides by the total mass. Errors when the mass is zero.
    pub fn normalize(&self) -> Result<ProbabilityMeasure> {
        let mass = self.total_mass();
        if mass <= 0.0 {
            return Err(Error::ZeroMass);
        }
        let weights = self.weights.iter().map(|w| w / mass).collect();
        ProbabilityMeasure::new(Measure::new(self.space.clone(), weights)?)
    }

    /// Reorders the weights to match `space`, matching outcomes by label.
    pub fn align_to(&self, space: &Arc<SampleSpace>) -> Result<Measure> {
        if same_space(&self.space, space) {
            return Ok(Measure {
                space: space.clone(),
                weights: self.weights.clone(),
            });
        }
        if self.space.len() != space.len() {
            return Err(Error::MismatchedSpaces);
        }
        let mut weights = vec![0.0; space.len()];
        for (label, w) in self.space.labels().iter().zip(&self.weights) {
            let idx = space
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
            weights[idx] = *w;
        }
        Measure::new(space.clone(), weights)
    }
}

/// Measure whose total mass is 1 within [`MASS_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityMeasure(Measure);

impl ProbabilityMeasure {
    pub fn new(measure: Measure) -> Result<Self> {
        let mass = measure.total_mass();
        if (mass - 1.0).abs() > MASS_TOL {
            return Err(Error::NotNormalized {
                mass,
                tol: MASS_TOL,
            });
        }
        Ok(Self(measure))
    }

    pub fn uniform(space: Arc<SampleSpace>) -> Self {
        let n = space.len();
        Self(Measure {
            space,
            weights: vec![1.0 / n as f64; n],
        })
    }

    pub fn as_measure(&self) -> &Measure {
        &self.0
    }

    pub fn into_measure(self) -> Measure {
        self.0
    }
}

impl std::ops::Deref for ProbabilityMeasure {
    type Target = Measure;

    fn deref(&self) -> &Measure {
        &self.0
    }
}

/// Real-valued function on a sample space, paired with measures by
/// expectation.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomVariable {
    space: Arc<SampleSpace>,
    values: Vec<f64>,
}

impl RandomVariable {
    pub fn new(space: Arc<SampleSpace>, values: Vec<f64>) -> Result<Self> {
        if values.len() != space.len() {
            return Err(Error::DimensionMismatch {
                expected: space.len(),
                got: values.len(),
            });
        }
        for (v, l) in values.iter().zip(space.labels()) {
            if !v.is_finite() {
                return Err(Error::NonFiniteEntry { label: l.clone() });
            }
        }
        Ok(Self { space, values })
    }

    pub fn constant(space: Arc<SampleSpace>, c: f64) -> Result<Self> {
        let n = space.len();
        Self::new(space, vec![c; n])
    }

    /// Indicator of the `i`-th outcome.
    pub fn basis(space: Arc<SampleSpace>, i: usize) -> Self {
        let mut values = vec![0.0; space.len()];
        values[i] = 1.0;
        Self { space, values }
    }

    pub fn space(&self) -> &Arc<SampleSpace> {
        &self.space
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn negated(&self) -> Self {
        Self {
            space: self.space.clone(),
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(
            self.space.clone(),
            self.values.iter().map(|v| factor * v).collect(),
        )
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        if !same_space(&self.space, &other.space) {
            return Err(Error::MismatchedSpaces);
        }
        Self::new(
            self.space.clone(),
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

/// The duality pairing `<x, y> = E_y{x} = sum_i x_i y_i`.
pub fn pairing(x: &RandomVariable, y: &Measure) -> Result<f64> {
    if !same_space(&x.space, &y.space) {
        return Err(Error::MismatchedSpaces);
    }
    Ok(x.values
        .iter()
        .zip(&y.weights)
        .map(|(v, w)| v * w)
        .sum())
}

/// Product measure on the product space, weights `q_i * p_j` row-major.
pub fn product_measure(q: &Measure, p: &Measure) -> Result<Measure> {
    let space = SampleSpace::product(&q.space, &p.space)?;
    let mut weights = Vec::with_capacity(q.len() * p.len());
    for qi in &q.weights {
        for pj in &p.weights {
            weights.push(qi * pj);
        }
    }
    Measure::new(space, weights)
}

// ---------------------------------------------------------------------------
// File I/O
// ---------------------------------------------------------------------------

/// On-disk formats for measures and random variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileFormat {
    Json,
    /// One `label,weight` row per outcome; `header` skips/emits a header row.
    Csv {
        header: bool,
    },
}

#[derive(Serialize, Deserialize)]
struct MeasureFile {
    space: Vec<String>,
    weights: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RandomVariableFile {
    space: Vec<String>,
    values: Vec<f64>,
}

pub fn load_measure(path: &Path, format: FileFormat) -> Result<Measure> {
    let data = fs::read_to_string(path)?;
    parse_measure(&data, format)
}

pub fn parse_measure(data: &str, format: FileFormat) -> Result<Measure> {
    let (labels, weights) = match format {
        FileFormat::Json => {
            let file: MeasureFile = serde_json::from_str(data)?;
            (file.space, file.weights)
        }
        FileFormat::Csv { header } => parse_csv(data, header)?,
    };
    Measure::new(SampleSpace::new(labels)?, weights)
}

pub fn save_measure(measure: &Measure, path: &Path, format: FileFormat) -> Result<()> {
    fs::write(path, render_measure(measure, format)?)?;
    Ok(())
}

pub fn render_measure(measure: &Measure, format: FileFormat) -> Result<String> {
    match format {
        FileFormat::Json => {
            let file = MeasureFile {
                space: measure.space.labels().to_vec(),
                weights: measure.weights.clone(),
            };
            Ok(serde_json::to_string(&file)?)
        }
        FileFormat::Csv { header } => {
            let mut out = String::new();
            if header {
                out.push_str("label,weight\n");
            }
            for (l, w) in measure.space.labels().iter().zip(&measure.weights) {
                out.push_str(&format!("{l},{w}\n"));
            }
            Ok(out)
        }
    }
}

pub fn load_random_variable(path: &Path, format: FileFormat) -> Result<RandomVariable> {
    let data = fs::read_to_string(path)?;
    parse_random_variable(&data, format)
}

pub fn parse_random_variable(data: &str, format: FileFormat) -> Result<RandomVariable> {
    let (labels, values) = match format {
        FileFormat::Json => {
            let file: RandomVariableFile = serde_json::from_str(data)?;
            (file.space, file.values)
        }
        FileFormat::Csv { header } => parse_csv(data, header)?,
    };
    RandomVariable::new(SampleSpace::new(labels)?, values)
}

pub fn save_random_variable(x: &RandomVariable, path: &Path, format: FileFormat) -> Result<()> {
    let text = match format {
        FileFormat::Json => {
            let file = RandomVariableFile {
                space: x.space.labels().to_vec(),
                values: x.values.clone(),
            };
            serde_json::to_string(&file)?
        }
        FileFormat::Csv { header } => {
            let mut out = String::new();
            if header {
                out.push_str("label,value\n");
            }
            for (l, v) in x.space.labels().iter().zip(&x.values) {
                out.push_str(&format!("{l},{v}\n"));
            }
            out
        }
    };
    fs::write(path, text)?;
    Ok(())
}

fn parse_csv(data: &str, header: bool) -> Result<(Vec<String>, Vec<f64>)> {
    let mut labels = Vec::new();
    let mut weights = Vec::new();
    for (lineno, line) in data.lines().enumerate() {
        if line.trim().is_empty() || (header && lineno == 0) {
            continue;
        }
        let (label, value) = line
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("line {}: expected `label,value`", lineno + 1)))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        labels.push(label.trim().to_string());
        weights.push(value);
    }
    Ok((labels, weights))
}
