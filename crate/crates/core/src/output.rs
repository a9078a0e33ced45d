//! Text renderings of a sample: `lines`, `csv` and `json`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sampler::SampleRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Lines,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lines" => Ok(Format::Lines),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidParameter(format!("unknown format {other:?}"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Lines => "lines",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// A record as it appears in csv/json output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub position: u64,
    pub id: String,
    pub generation: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ticket_number: Option<String>,
}

impl Row {
    pub fn from_record(record: &SampleRecord, show_tickets: bool) -> Self {
        Row {
            position: record.position,
            id: record.id.clone(),
            generation: record.generation,
            ticket_number: show_tickets.then(|| record.number.to_string()),
        }
    }
}

pub fn render(records: &[SampleRecord], format: Format, show_tickets: bool) -> String {
    let rows: Vec<Row> = records
        .iter()
        .map(|r| Row::from_record(r, show_tickets))
        .collect();
    match format {
        Format::Lines => {
            let mut out = String::new();
            for row in &rows {
                out.push_str(&row.id);
                if let Some(t) = &row.ticket_number {
                    out.push(' ');
                    out.push_str(t);
                }
                out.push('\n');
            }
            out
        }
        Format::Csv => render_csv(&rows, show_tickets),
        Format::Json => {
            let mut out = serde_json::to_string_pretty(&rows).expect("rows always serialize");
            out.push('\n');
            out
        }
    }
}

fn render_csv(rows: &[Row], show_tickets: bool) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let mut header = vec!["position", "id", "generation"];
    if show_tickets {
        header.push("ticket_number");
    }
    w.write_record(&header).expect("write to Vec");
    for row in rows {
        let mut fields = vec![
            row.position.to_string(),
            row.id.clone(),
            row.generation.to_string(),
        ];
        if let Some(t) = &row.ticket_number {
            fields.push(t.clone());
        }
        w.write_record(&fields).expect("write to Vec");
    }
    let bytes = w.into_inner().expect("flush to Vec");
    String::from_utf8(bytes).expect("csv of UTF-8 fields is UTF-8")
}

/// Reads csv or json output back into rows. The `lines` format carries ids
/// (and optionally tickets) only, so positions are renumbered from 1 and
/// generations are recounted per id.
pub fn parse(text: &str, format: Format) -> Result<Vec<Row>> {
    let bad =
        |e: &dyn fmt::Display| Error::InvalidParameter(format!("malformed {format} output: {e}"));
    match format {
        Format::Json => serde_json::from_str(text).map_err(|e| bad(&e)),
        Format::Csv => {
            let mut r = csv::Reader::from_reader(text.as_bytes());
            r.deserialize()
                .map(|row| row.map_err(|e| bad(&e)))
                .collect()
        }
        Format::Lines => {
            let mut counts = std::collections::HashMap::<String, u64>::new();
            let mut rows = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let (id, ticket) = match line.rsplit_once(' ') {
                    Some((id, t)) if t.starts_with("0.") => (id, Some(t.to_owned())),
                    _ => (line, None),
                };
                let generation = counts.entry(id.to_owned()).or_insert(0);
                *generation += 1;
                rows.push(Row {
                    position: i as u64 + 1,
                    id: id.to_owned(),
                    generation: *generation,
                    ticket_number: ticket,
                });
            }
            Ok(rows)
        }
    }
}
