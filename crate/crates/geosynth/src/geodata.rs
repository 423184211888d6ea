//! Dataset model, CSV ingestion, pairwise distances, and record suppression.
//!
//! A [`GeoDataset`] owns the immutable inputs of every downstream stage:
//! planar 2-D locations, a real-valued response per record (log scale by
//! convention for income-like data), a covariate matrix whose first column is
//! an all-ones intercept, and one opaque identifier per record.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Immutable geocoded dataset: locations, responses, covariates, ids.
#[derive(Debug, Clone, PartialEq)]
pub struct GeoDataset {
    locations: Vec<[f64; 2]>,
    responses: DVector<f64>,
    covariates: DMatrix<f64>,
    record_ids: Vec<String>,
    covariate_names: Vec<String>,
}

impl GeoDataset {
    /// Builds a dataset from raw parts, validating every invariant.
    ///
    /// `covariates` must already include the leading all-ones intercept
    /// column. `record_ids` defaults to zero-based row indices when `None`.
    /// `covariate_names` labels the non-intercept columns (used for CSV
    /// export); pass `None` for generated `x1, x2, ...` names.
    pub fn new(
        locations: Vec<[f64; 2]>,
        responses: Vec<f64>,
        covariates: DMatrix<f64>,
        record_ids: Option<Vec<String>>,
        covariate_names: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = locations.len();
        if n < 2 {
            return Err(Error::InsufficientData { n });
        }
        if responses.len() != n || covariates.nrows() != n {
            return Err(Error::Dimension(format!(
                "locations ({}), responses ({}) and covariate rows ({}) must agree",
                n,
                responses.len(),
                covariates.nrows()
            )));
        }
        let p = covariates.ncols();
        if p == 0 || p > n {
            return Err(Error::Dimension(format!(
                "covariate matrix must have 1 <= p <= N columns, got p={p}, N={n}"
            )));
        }
        if covariates.column(0).iter().any(|&v| v != 1.0) {
            return Err(Error::Domain(
                "first covariate column must be the all-ones intercept".into(),
            ));
        }
        for (i, loc) in locations.iter().enumerate() {
            if !loc[0].is_finite() || !loc[1].is_finite() {
                return Err(Error::Domain(format!("non-finite coordinate at record {i}")));
            }
        }
        for (i, &y) in responses.iter().enumerate() {
            if !y.is_finite() {
                return Err(Error::Domain(format!("non-finite response at record {i}")));
            }
        }
        if covariates.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("non-finite covariate value".into()));
        }
        let scale = covariates.norm().max(1.0);
        if covariates.rank(1e-10 * scale) < p {
            return Err(Error::Domain(format!(
                "covariate matrix is rank deficient (p = {p})"
            )));
        }
        let record_ids =
            record_ids.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect::<Vec<_>>());
        if record_ids.len() != n {
            return Err(Error::Dimension(format!(
                "{} record ids for {} records",
                record_ids.len(),
                n
            )));
        }
        let mut seen = HashSet::with_capacity(n);
        for id in &record_ids {
            if !seen.insert(id.as_str()) {
                return Err(Error::Domain(format!("duplicate record id `{id}`")));
            }
        }
        let covariate_names = match covariate_names {
            Some(names) => {
                if names.len() != p - 1 {
                    return Err(Error::Dimension(format!(
                        "{} covariate names for {} non-intercept columns",
                        names.len(),
                        p - 1
                    )));
                }
                names
            }
            None => (1..p).map(|j| format!("x{j}")).collect(),
        };
        Ok(GeoDataset {
            locations,
            responses: DVector::from_vec(responses),
            covariates,
            record_ids,
            covariate_names,
        })
    }

    pub fn n(&self) -> usize {
        self.locations.len()
    }

    /// Number of covariate columns including the intercept.
    pub fn p(&self) -> usize {
        self.covariates.ncols()
    }

    pub fn locations(&self) -> &[[f64; 2]] {
        &self.locations
    }

    pub fn responses(&self) -> &DVector<f64> {
        &self.responses
    }

    pub fn covariates(&self) -> &DMatrix<f64> {
        &self.covariates
    }

    pub fn record_ids(&self) -> &[String] {
        &self.record_ids
    }

    pub fn covariate_names(&self) -> &[String] {
        &self.covariate_names
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.record_ids.iter().position(|r| r == id)
    }

    /// Returns a copy with the listed records removed (the "suppressed"
    /// baseline). Errors on unknown ids or if fewer than two records remain.
    pub fn suppress(&self, ids: &[String]) -> Result<GeoDataset> {
        let mut drop = HashSet::new();
        for id in ids {
            let idx = self
                .index_of(id)
                .ok_or_else(|| Error::UnknownRecord(id.clone()))?;
            drop.insert(idx);
        }
        let keep: Vec<usize> = (0..self.n()).filter(|i| !drop.contains(i)).collect();
        if keep.len() < 2 {
            return Err(Error::InsufficientData { n: keep.len() });
        }
        let locations = keep.iter().map(|&i| self.locations[i]).collect();
        let responses = keep.iter().map(|&i| self.responses[i]).collect();
        let covariates = DMatrix::from_fn(keep.len(), self.p(), |r, c| self.covariates[(keep[r], c)]);
        let record_ids = keep.iter().map(|&i| self.record_ids[i].clone()).collect();
        GeoDataset::new(
            locations,
            responses,
            covariates,
            Some(record_ids),
            Some(self.covariate_names.clone()),
        )
    }

    /// Writes the dataset as CSV mirroring the input schema plus a
    /// `record_id` column. Floats are written in shortest round-trip form so
    /// a reload reproduces the arrays bit for bit.
    pub fn write_csv(&self, path: &Path, schema: &ColumnSchema) -> Result<()> {
        let mut wtr = csv::Writer::from_path(path).map_err(Error::Csv)?;
        let mut header = vec![
            "record_id".to_string(),
            schema.x.clone(),
            schema.y.clone(),
            schema.response.clone(),
        ];
        let cov_names: Vec<String> = if schema.covariates.len() == self.covariate_names.len() {
            schema.covariates.clone()
        } else {
            self.covariate_names.clone()
        };
        header.extend(cov_names.iter().cloned());
        wtr.write_record(&header)?;
        let mut buf = String::new();
        for i in 0..self.n() {
            buf.clear();
            let mut row: Vec<String> = Vec::with_capacity(header.len());
            row.push(self.record_ids[i].clone());
            row.push(format!("{}", self.locations[i][0]));
            row.push(format!("{}", self.locations[i][1]));
            row.push(format!("{}", self.responses[i]));
            for j in 1..self.p() {
                let mut s = String::new();
                let _ = write!(s, "{}", self.covariates[(i, j)]);
                row.push(s);
            }
            wtr.write_record(&row)?;
        }
        wtr.flush().map_err(|e| Error::io(path, e))?;
        Ok(())
    }
}

/// Comparison operator for a row filter predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CmpOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl CmpOp {
    fn apply(self, lhs: f64, rhs: f64) -> bool {
        match self {
            CmpOp::Eq => lhs == rhs,
            CmpOp::Ne => lhs != rhs,
            CmpOp::Lt => lhs < rhs,
            CmpOp::Le => lhs <= rhs,
            CmpOp::Gt => lhs > rhs,
            CmpOp::Ge => lhs >= rhs,
        }
    }
}

/// Numeric predicate on one column, e.g. `beds == 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowFilter {
    pub column: String,
    pub op: CmpOp,
    pub value: f64,
}

impl std::str::FromStr for RowFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // longest operators first so `<=` is not read as `<`
        for (tok, op) in [
            ("==", CmpOp::Eq),
            ("!=", CmpOp::Ne),
            ("<=", CmpOp::Le),
            (">=", CmpOp::Ge),
            ("<", CmpOp::Lt),
            (">", CmpOp::Gt),
        ] {
            if let Some(pos) = s.find(tok) {
                let column = s[..pos].trim().to_string();
                let rhs = s[pos + tok.len()..].trim();
                if column.is_empty() || rhs.is_empty() {
                    break;
                }
                let value: f64 = rhs
                    .parse()
                    .map_err(|_| Error::Schema(format!("filter value `{rhs}` is not numeric")))?;
                return Ok(RowFilter {
                    column,
                    op,
                    value,
                });
            }
        }
        Err(Error::Schema(format!(
            "cannot parse filter `{s}` (expected `<column> <op> <number>`)"
        )))
    }
}

/// Optional projection applied to raw coordinates at load time.
///
/// Coordinates are treated as planar by default; `Equirectangular` rescales
/// longitude by cos(mean latitude) for small-extent lat/lon inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Projection {
    #[default]
    None,
    Equirectangular,
}

/// Names the CSV columns and ingestion options for [`load_csv`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColumnSchema {
    /// First coordinate column (x, or longitude).
    pub x: String,
    /// Second coordinate column (y, or latitude).
    pub y: String,
    /// Response column.
    pub response: String,
    /// Non-intercept covariate columns; an intercept is always prepended.
    #[serde(default)]
    pub covariates: Vec<String>,
    /// Optional id column; zero-based post-filter row indices otherwise.
    #[serde(default)]
    pub id: Option<String>,
    /// Optional numeric row filter such as `beds == 1`.
    #[serde(default)]
    pub filter: Option<String>,
    /// Log-transform the response at load time.
    #[serde(default)]
    pub log_response: bool,
    /// Coordinate projection; defaults to raw planar coordinates.
    #[serde(default)]
    pub projection: Projection,
}

impl ColumnSchema {
    /// Minimal schema over columns `x`, `y`, `response`.
    pub fn bare() -> Self {
        ColumnSchema {
            x: "x".into(),
            y: "y".into(),
            response: "response".into(),
            covariates: Vec::new(),
            id: None,
            filter: None,
            log_response: false,
            projection: Projection::None,
        }
    }

    pub fn parsed_filter(&self) -> Result<Option<RowFilter>> {
        self.filter.as_deref().map(str::parse).transpose()
    }
}

fn parse_cell(raw: &str, row: usize, column: &str) -> Result<f64> {
    raw.trim().parse::<f64>().map_err(|_| Error::Parse {
        row,
        column: column.to_string(),
        message: format!("`{raw}` is not a number"),
    })
}

/// Loads a validated [`GeoDataset`] from a headered CSV file.
///
/// Rows failing the schema's filter are dropped; the response is
/// log-transformed when the schema says so. Record ids come from the schema's
/// id column or default to post-filter row indices.
pub fn load_csv(path: &Path, schema: &ColumnSchema) -> Result<GeoDataset> {
    let filter = schema.parsed_filter()?;
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(Error::Csv)?;
    let headers = rdr.headers()?.clone();
    let col = |name: &str| -> Result<usize> {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Schema(format!("missing column `{name}`")))
    };
    let ix = col(&schema.x)?;
    let iy = col(&schema.y)?;
    let iresp = col(&schema.response)?;
    let icovs: Vec<usize> = schema
        .covariates
        .iter()
        .map(|c| col(c))
        .collect::<Result<_>>()?;
    let iid = schema.id.as_deref().map(col).transpose()?;
    let ifilter = filter.as_ref().map(|f| col(&f.column)).transpose()?;

    let mut locations = Vec::new();
    let mut responses = Vec::new();
    let mut cov_rows: Vec<Vec<f64>> = Vec::new();
    let mut ids: Vec<String> = Vec::new();

    for (row_idx, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let get = |i: usize, name: &str| -> Result<f64> {
            let raw = rec.get(i).ok_or_else(|| Error::Parse {
                row: row_idx,
                column: name.to_string(),
                message: "row is shorter than the header".into(),
            })?;
            parse_cell(raw, row_idx, name)
        };
        if let (Some(f), Some(fi)) = (&filter, ifilter) {
            let v = get(fi, &f.column)?;
            if !f.op.apply(v, f.value) {
                continue;
            }
        }
        let x = get(ix, &schema.x)?;
        let y = get(iy, &schema.y)?;
        let mut resp = get(iresp, &schema.response)?;
        if schema.log_response {
            if resp <= 0.0 {
                return Err(Error::Parse {
                    row: row_idx,
                    column: schema.response.clone(),
                    message: format!("cannot log-transform non-positive response {resp}"),
                });
            }
            resp = resp.ln();
        }
        let mut covs = Vec::with_capacity(icovs.len());
        for (k, &ci) in icovs.iter().enumerate() {
            covs.push(get(ci, &schema.covariates[k])?);
        }
        locations.push([x, y]);
        responses.push(resp);
        cov_rows.push(covs);
        if let Some(ii) = iid {
            ids.push(rec.get(ii).unwrap_or_default().to_string());
        }
    }

    let n = locations.len();
    if n < 2 {
        return Err(Error::InsufficientData { n });
    }
    if schema.projection == Projection::Equirectangular {
        let mean_lat = locations.iter().map(|l| l[1]).sum::<f64>() / n as f64;
        let scale = mean_lat.to_radians().cos();
        for loc in &mut locations {
            loc[0] *= scale;
        }
    }
    let p = 1 + icovs.len();
    let covariates = DMatrix::from_fn(n, p, |r, c| if c == 0 { 1.0 } else { cov_rows[r][c - 1] });
    let record_ids = if iid.is_some() { Some(ids) } else { None };
    GeoDataset::new(
        locations,
        responses,
        covariates,
        record_ids,
        Some(schema.covariates.clone()),
    )
}

/// Symmetric N x N Euclidean distance matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    d: DMatrix<f64>,
}

impl DistanceMatrix {
    /// Wraps an explicit distance matrix, validating symmetry, nonnegativity
    /// and a zero diagonal.
    pub fn from_matrix(d: DMatrix<f64>) -> Result<Self> {
        if d.nrows() != d.ncols() {
            return Err(Error::Dimension(format!(
                "distance matrix must be square, got {}x{}",
                d.nrows(),
                d.ncols()
            )));
        }
        for i in 0..d.nrows() {
            if d[(i, i)] != 0.0 {
                return Err(Error::Domain(format!("nonzero diagonal at {i}")));
            }
            for j in 0..i {
                let v = d[(i, j)];
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::Domain(format!("invalid distance at ({i},{j}): {v}")));
                }
                if (v - d[(j, i)]).abs() > 0.0 {
                    return Err(Error::Domain(format!("asymmetric distances at ({i},{j})")));
                }
            }
        }
        Ok(DistanceMatrix { d })
    }

    pub fn n(&self) -> usize {
        self.d.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.d[(i, j)]
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.d
    }

    /// Per-record distance to the nearest *other* record.
    pub fn nn_distances(&self) -> Vec<f64> {
        let n = self.n();
        (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i)
                    .map(|j| self.d[(i, j)])
                    .fold(f64::INFINITY, f64::min)
            })
            .collect()
    }

    pub fn max_distance(&self) -> f64 {
        self.d.iter().fold(0.0_f64, |a, &b| a.max(b))
    }
}

/// Euclidean pairwise distances between dataset locations.
pub fn pairwise_distances(data: &GeoDataset) -> DistanceMatrix {
    DistanceMatrix {
        d: distances_between(data.locations(), data.locations()),
    }
}

/// Rectangular distance matrix between two point sets (rows x cols).
pub(crate) fn distances_between(a: &[[f64; 2]], b: &[[f64; 2]]) -> DMatrix<f64> {
    DMatrix::from_fn(a.len(), b.len(), |i, j| {
        let dx = a[i][0] - b[j][0];
        let dy = a[i][1] - b[j][1];
        (dx * dx + dy * dy).sqrt()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn two_point_dataset() -> GeoDataset {
        GeoDataset::new(
            vec![[0.0, 0.0], [3.0, 4.0]],
            vec![1.0, 2.0],
            DMatrix::from_element(2, 1, 1.0),
            None,
            None,
        )
        .unwrap()
    }

    #[test]
    fn pairwise_distance_three_four_five() {
        let d = pairwise_distances(&two_point_dataset());
        assert_eq!(d.get(0, 1), 5.0);
        assert_eq!(d.get(1, 0), 5.0);
        assert_eq!(d.get(0, 0), 0.0);
    }

    #[test]
    fn pairwise_matches_brute_force() {
        let mut locs = Vec::new();
        let mut state = 1234u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..50 {
            locs.push([next(), next()]);
        }
        let data = GeoDataset::new(
            locs.clone(),
            vec![0.0; 50],
            DMatrix::from_element(50, 1, 1.0),
            None,
            None,
        )
        .unwrap();
        let d = pairwise_distances(&data);
        for i in 0..50 {
            for j in 0..50 {
                let dx = locs[i][0] - locs[j][0];
                let dy = locs[i][1] - locs[j][1];
                assert_eq!(d.get(i, j), (dx * dx + dy * dy).sqrt());
            }
        }
    }

    #[test]
    fn suppress_empty_is_identity() {
        let data = two_point_dataset();
        let kept = data.suppress(&[]).unwrap();
        assert_eq!(kept, data);
    }

    #[test]
    fn suppress_unknown_id_errors() {
        let data = two_point_dataset();
        assert!(matches!(
            data.suppress(&["nope".to_string()]),
            Err(Error::UnknownRecord(_))
        ));
    }

    #[test]
    fn suppress_all_errors() {
        let data = two_point_dataset();
        let ids: Vec<String> = data.record_ids().to_vec();
        assert!(matches!(
            data.suppress(&ids),
            Err(Error::InsufficientData { .. })
        ));
    }

    #[test]
    fn rejects_duplicate_ids_and_bad_shapes() {
        let err = GeoDataset::new(
            vec![[0.0, 0.0], [1.0, 0.0]],
            vec![1.0, 2.0],
            DMatrix::from_element(2, 1, 1.0),
            Some(vec!["a".into(), "a".into()]),
            None,
        );
        assert!(err.is_err());
        let err = GeoDataset::new(
            vec![[0.0, 0.0]],
            vec![1.0],
            DMatrix::from_element(1, 1, 1.0),
            None,
            None,
        );
        assert!(matches!(err, Err(Error::InsufficientData { n: 1 })));
    }

    #[test]
    fn rejects_rank_deficient_covariates() {
        // second column duplicates the intercept
        let x = DMatrix::from_fn(3, 2, |_, _| 1.0);
        let err = GeoDataset::new(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
            vec![1.0, 2.0, 3.0],
            x,
            None,
            None,
        );
        assert!(err.is_err());
    }

    #[test]
    fn load_two_row_csv_pass_through() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "x,y,response").unwrap();
        writeln!(f, "0.0,0.0,1.5").unwrap();
        writeln!(f, "3.0,4.0,2.5").unwrap();
        let data = load_csv(f.path(), &ColumnSchema::bare()).unwrap();
        assert_eq!(data.n(), 2);
        assert_eq!(data.responses()[0], 1.5);
        assert_eq!(data.record_ids(), &["0".to_string(), "1".to_string()]);
    }

    #[test]
    fn filter_and_log_transform() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "lon,lat,price,sqft,beds").unwrap();
        writeln!(f, "-122.4,37.7,100000,600,1").unwrap();
        writeln!(f, "-122.5,37.8,200000,900,2").unwrap();
        writeln!(f, "-122.6,37.6,150000,700,1").unwrap();
        let schema = ColumnSchema {
            x: "lon".into(),
            y: "lat".into(),
            response: "price".into(),
            covariates: vec!["sqft".into()],
            id: None,
            filter: Some("beds == 1".into()),
            log_response: true,
            projection: Projection::None,
        };
        let data = load_csv(f.path(), &schema).unwrap();
        assert_eq!(data.n(), 2);
        assert_eq!(data.p(), 2);
        assert!((data.responses()[0] - 100000f64.ln()).abs() < 1e-15);
        assert_eq!(data.covariates()[(1, 1)], 700.0);
    }

    #[test]
    fn filter_removing_all_rows_is_insufficient() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "x,y,response,beds").unwrap();
        writeln!(f, "0,0,1,2").unwrap();
        writeln!(f, "1,1,2,2").unwrap();
        let mut schema = ColumnSchema::bare();
        schema.filter = Some("beds == 1".into());
        assert!(matches!(
            load_csv(f.path(), &schema),
            Err(Error::InsufficientData { n: 0 })
        ));
    }

    #[test]
    fn missing_column_is_schema_error() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "x,y").unwrap();
        writeln!(f, "0,0").unwrap();
        assert!(matches!(
            load_csv(f.path(), &ColumnSchema::bare()),
            Err(Error::Schema(_))
        ));
    }

    #[test]
    fn non_numeric_cell_reports_row() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "x,y,response").unwrap();
        writeln!(f, "0,0,1").unwrap();
        writeln!(f, "1,oops,2").unwrap();
        match load_csv(f.path(), &ColumnSchema::bare()) {
            Err(Error::Parse { row, column, .. }) => {
                assert_eq!(row, 1);
                assert_eq!(column, "y");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn csv_round_trip_is_bit_identical() {
        let data = GeoDataset::new(
            vec![[0.1234567890123, -7.25], [1.0 / 3.0, 2.0f64.sqrt()]],
            vec![0.1 + 0.2, -1.5e-13],
            DMatrix::from_fn(2, 2, |r, c| if c == 0 { 1.0 } else { 0.7 * (r as f64 + 0.3) }),
            None,
            Some(vec!["sqft".into()]),
        )
        .unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        let mut schema = ColumnSchema::bare();
        schema.covariates = vec!["sqft".into()];
        schema.id = Some("record_id".into());
        data.write_csv(&path, &schema).unwrap();
        let reloaded = load_csv(&path, &schema).unwrap();
        assert_eq!(data.locations(), reloaded.locations());
        assert_eq!(data.responses(), reloaded.responses());
        assert_eq!(data.covariates(), reloaded.covariates());
    }

    #[test]
    fn filter_parser_accepts_all_operators() {
        for (s, op) in [
            ("beds == 1", CmpOp::Eq),
            ("beds != 1", CmpOp::Ne),
            ("beds <= 1", CmpOp::Le),
            ("beds >= 1", CmpOp::Ge),
            ("beds < 1", CmpOp::Lt),
            ("beds > 1", CmpOp::Gt),
        ] {
            let f: RowFilter = s.parse().unwrap();
            assert_eq!(f.op, op);
            assert_eq!(f.column, "beds");
            assert_eq!(f.value, 1.0);
        }
        assert!("beds".parse::<RowFilter>().is_err());
    }
}
