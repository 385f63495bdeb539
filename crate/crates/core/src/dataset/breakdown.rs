use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::coverage::analyzed_configuration;
use super::{cross_check, CrossCheck, DatasetRecord, ValidityLabel};
use crate::error::DatasetError;
use crate::syllogism::{enumerate_configurations, Configuration, Figure, Mood};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Cell {
    /// Predictions scored in this cell.
    pub n: usize,
    pub errors: usize,
}

impl Cell {
    /// Error rate, or `None` for an empty cell.
    pub fn rate(&self) -> Option<f64> {
        (self.n > 0).then(|| self.errors as f64 / self.n as f64)
    }

    fn add(&mut self, wrong: bool) {
        self.n += 1;
        self.errors += usize::from(wrong);
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Marginal<K> {
    pub key: K,
    pub n: usize,
    pub errors: usize,
    pub rate: Option<f64>,
}

impl<K> Marginal<K> {
    fn new(key: K, cell: Cell) -> Self {
        Marginal {
            key,
            n: cell.n,
            errors: cell.errors,
            rate: cell.rate(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigurationCell {
    pub configuration: Configuration,
    pub n: usize,
    pub errors: usize,
    pub rate: Option<f64>,
}

/// Error counts per configuration.
///
/// A prediction is correct when it agrees with the gold label on the
/// binary question "valid or not"; conditionally valid counts as not
/// valid. Records whose configuration cannot be determined, or whose gold
/// label fails the cross-check, are counted under "N/A".
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorBreakdown {
    pub total: usize,
    /// All 256 configurations in configuration order.
    pub cells: Vec<ConfigurationCell>,
    pub by_mood: Vec<Marginal<Mood>>,
    pub by_figure: Vec<Marginal<Figure>>,
    pub not_assessable: Cell,
}

impl ErrorBreakdown {
    pub fn cell(&self, configuration: Configuration) -> &ConfigurationCell {
        &self.cells[configuration.index()]
    }

    /// 64 mood rows by 4 figure columns of error rates; empty cells are
    /// left blank.
    pub fn matrix_csv(&self) -> String {
        let mut out = String::from("mood,1,2,3,4\n");
        for mood in Mood::all() {
            out.push_str(&mood.to_string());
            for figure in Figure::ALL {
                out.push(',');
                if let Some(rate) = self.cell(Configuration::new(mood, figure)).rate {
                    write!(out, "{rate:.4}").unwrap();
                }
            }
            out.push('\n');
        }
        out
    }

    /// One row per configuration, then the "N/A" bucket.
    pub fn long_csv(&self) -> String {
        let mut out = String::from("configuration,n,errors,rate\n");
        let rows = self
            .cells
            .iter()
            .map(|c| (c.configuration.to_string(), c.n, c.errors, c.rate))
            .chain([(
                "N/A".to_string(),
                self.not_assessable.n,
                self.not_assessable.errors,
                self.not_assessable.rate(),
            )]);
        for (name, n, errors, rate) in rows {
            write!(out, "{name},{n},{errors},").unwrap();
            if let Some(rate) = rate {
                write!(out, "{rate:.4}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Scores `predictions` (record id → predicted label) against the gold
/// labels of `records`.
pub fn error_breakdown(
    records: &[DatasetRecord],
    predictions: &BTreeMap<String, ValidityLabel>,
) -> Result<ErrorBreakdown, DatasetError> {
    let by_id: BTreeMap<&str, &DatasetRecord> = records.iter().map(|r| (r.id.as_str(), r)).collect();
    let mut cells = vec![Cell::default(); Configuration::COUNT];
    let mut not_assessable = Cell::default();
    for (id, predicted) in predictions {
        let record = by_id
            .get(id.as_str())
            .ok_or_else(|| DatasetError::UnknownId(id.clone()))?;
        let gold = record
            .gold
            .as_ref()
            .ok_or_else(|| DatasetError::MissingGold(id.clone()))?;
        let wrong = predicted.is_valid() != gold.label.is_valid();
        let configuration = gold.configuration().or_else(|| analyzed_configuration(record));
        let assessable = configuration.filter(|&c| {
            matches!(
                cross_check(id, Some(c), Some(gold.label), gold.interpretation),
                Ok(CrossCheck::Pass)
            )
        });
        match assessable {
            Some(c) => cells[c.index()].add(wrong),
            None => not_assessable.add(wrong),
        }
    }

    let configurations = enumerate_configurations();
    let mut by_mood: BTreeMap<Mood, Cell> = BTreeMap::new();
    let mut by_figure: BTreeMap<Figure, Cell> = BTreeMap::new();
    for (c, cell) in configurations.iter().zip(&cells) {
        for marginal in [
            by_mood.entry(c.mood).or_default(),
            by_figure.entry(c.figure).or_default(),
        ] {
            marginal.n += cell.n;
            marginal.errors += cell.errors;
        }
    }
    Ok(ErrorBreakdown {
        total: predictions.len(),
        cells: configurations
            .into_iter()
            .zip(&cells)
            .map(|(configuration, cell)| ConfigurationCell {
                configuration,
                n: cell.n,
                errors: cell.errors,
                rate: cell.rate(),
            })
            .collect(),
        by_mood: Mood::all().map(|m| Marginal::new(m, by_mood[&m])).collect(),
        by_figure: Figure::ALL
            .into_iter()
            .map(|f| Marginal::new(f, by_figure[&f]))
            .collect(),
        not_assessable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{generate, GenerateOptions, TermTriple};
    use crate::validity::Interpretation;

    fn records() -> Vec<DatasetRecord> {
        let t = TermTriple::new("athenians", "greeks", "humans").unwrap();
        generate(&[t], Interpretation::Modern, GenerateOptions::default())
            .unwrap()
            .records
    }

    fn gold_predictions(records: &[DatasetRecord]) -> BTreeMap<String, ValidityLabel> {
        records
            .iter()
            .map(|r| (r.id.clone(), r.gold.as_ref().unwrap().label))
            .collect()
    }

    #[test]
    fn all_correct() {
        let records = records();
        let b = error_breakdown(&records, &gold_predictions(&records)).unwrap();
        assert_eq!(b.total, 256);
        assert!(b.cells.iter().all(|c| c.n == 1 && c.errors == 0 && c.rate == Some(0.0)));
        assert_eq!(b.not_assessable, Cell::default());
        assert_eq!(b.by_figure.iter().map(|m| m.n).sum::<usize>(), 256);
    }

    #[test]
    fn one_cell_wrong() {
        let records = records();
        let mut predictions = gold_predictions(&records);
        predictions.insert("t000-AAA-1".into(), ValidityLabel::Invalid);
        let b = error_breakdown(&records, &predictions).unwrap();
        let aaa1: Configuration = "AAA-1".parse().unwrap();
        assert_eq!(b.cell(aaa1).rate, Some(1.0));
        assert_eq!(b.cells.iter().map(|c| c.errors).sum::<usize>(), 1);
        let matrix = b.matrix_csv();
        assert_eq!(matrix.lines().count(), 65);
        assert_eq!(matrix.lines().nth(1).unwrap(), "AAA,1.0000,0.0000,0.0000,0.0000");
    }

    #[test]
    fn empty_cells_are_blank() {
        let records = records();
        let predictions = BTreeMap::from([("t000-EIO-3".to_string(), ValidityLabel::Invalid)]);
        let b = error_breakdown(&records, &predictions).unwrap();
        assert!(b.matrix_csv().lines().nth(1).unwrap() == "AAA,,,,");
        let long = b.long_csv();
        assert_eq!(long.lines().count(), 258);
        assert!(long.contains("\nEIO-3,1,1,1.0000\n"));
        assert!(long.ends_with("N/A,0,0,\n"));
    }

    #[test]
    fn unknown_and_ungraded() {
        let mut records = records();
        let p = BTreeMap::from([("nope".to_string(), ValidityLabel::Valid)]);
        assert!(matches!(error_breakdown(&records, &p), Err(DatasetError::UnknownId(_))));
        records[0].gold = None;
        let p = BTreeMap::from([("t000-AAA-1".to_string(), ValidityLabel::Valid)]);
        assert!(matches!(
            error_breakdown(&records, &p),
            Err(DatasetError::MissingGold(_))
        ));
    }

    #[test]
    fn cross_check_failures_are_not_assessable() {
        let mut records = records();
        let aae = records.iter_mut().find(|r| r.id == "t000-AAE-1").unwrap();
        aae.gold.as_mut().unwrap().label = ValidityLabel::Valid;
        let predictions = BTreeMap::from([("t000-AAE-1".to_string(), ValidityLabel::Valid)]);
        let b = error_breakdown(&records, &predictions).unwrap();
        assert_eq!(b.not_assessable, Cell { n: 1, errors: 0 });
        assert_eq!(b.cells.iter().map(|c| c.n).sum::<usize>(), 0);
    }
}
