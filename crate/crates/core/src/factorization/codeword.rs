//! Codewords, S-codewords and the quadruple encoding of minimal segments.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::segment::{is_minimal_segment_gap_rules, segment_factors_follow_gap_rules};
use super::{generic_factors, Factor, Orientation};
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Letter {
    O,
    E,
    P,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SLetter {
    S,
    P,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::O => "O",
            Letter::E => "E",
            Letter::P => "P",
        })
    }
}

impl fmt::Display for SLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SLetter::S => "S",
            SLetter::P => "P",
        })
    }
}

/// Writes runs as `X^k` (plain `X` for runs of one).
fn write_runs<T: fmt::Display + PartialEq>(
    f: &mut fmt::Formatter<'_>,
    letters: &[T],
) -> fmt::Result {
    let mut i = 0;
    while i < letters.len() {
        let mut j = i + 1;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        write!(f, "{}", letters[i])?;
        if j - i > 1 {
            write!(f, "^{}", j - i)?;
        }
        i = j;
    }
    Ok(())
}

/// Letter string over `O`, `E`, `P`, one letter per part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Codeword(pub Vec<Letter>);

impl Codeword {
    pub fn s_word(&self) -> SWord {
        SWord(
            self.0
                .iter()
                .map(|l| match l {
                    Letter::P => SLetter::P,
                    _ => SLetter::S,
                })
                .collect(),
        )
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_runs(f, &self.0)
    }
}

/// Codeword with `O` and `E` identified as `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SWord(pub Vec<SLetter>);

impl SWord {
    pub fn singletons(&self) -> usize {
        self.0.iter().filter(|&&l| l == SLetter::S).count()
    }

    pub fn pair_letters(&self) -> usize {
        self.0.len() - self.singletons()
    }
}

impl fmt::Display for SWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_runs(f, &self.0)
    }
}

impl FromStr for SWord {
    type Err = Error;

    /// Accepts run-length text such as `S^2P^4S^4`, `SP2S` or `SSPPS`.
    fn from_str(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let mut letters = Vec::new();
        let mut chars = text.chars().filter(|c| !c.is_whitespace()).peekable();
        while let Some(c) = chars.next() {
            let letter = match c {
                'S' => SLetter::S,
                'P' => SLetter::P,
                _ => return Err(err("expected S or P")),
            };
            if chars.peek() == Some(&'^') {
                chars.next();
            }
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let count: usize = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| err("bad exponent"))?
            };
            letters.extend(std::iter::repeat_n(letter, count));
        }
        Ok(SWord(letters))
    }
}

/// `(W, ω, ε, s)`: S-codeword, odd part count, even part count, smallest part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Quadruple {
    pub word: SWord,
    pub odd: u32,
    pub even: u32,
    pub smallest: u32,
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.word, self.odd, self.even, self.smallest
        )
    }
}

fn not_segment(p: &Partition, orientation: Orientation) -> Error {
    Error::NotMinimalSegment {
        partition: p.clone(),
        orientation: orientation.name(),
    }
}

fn segment_factors(segment: &Partition, orientation: Orientation) -> Result<Vec<Factor>> {
    if !is_minimal_segment_gap_rules(segment, orientation) {
        return Err(not_segment(segment, orientation));
    }
    Ok(generic_factors(segment.parts(), orientation))
}

pub fn codeword(segment: &Partition, orientation: Orientation) -> Result<Codeword> {
    let factors = segment_factors(segment, orientation)?;
    let mut letters = Vec::with_capacity(segment.len());
    for f in &factors {
        match f {
            Factor::OddSingleton { .. } => letters.push(Letter::O),
            Factor::EvenSingleton { .. } => letters.push(Letter::E),
            Factor::Pair { .. } => letters.extend([Letter::P, Letter::P]),
            Factor::Segment { .. } => unreachable!("generic factors contain no segments"),
        }
    }
    Ok(Codeword(letters))
}

impl Quadruple {
    pub fn encode(segment: &Partition, orientation: Orientation) -> Result<Quadruple> {
        let word = codeword(segment, orientation)?.s_word();
        let odd = segment.parts().iter().filter(|&&x| x % 2 == 1).count() as u32;
        Ok(Quadruple {
            word,
            odd,
            even: segment.len() as u32 - odd,
            smallest: segment.parts()[0],
        })
    }

    /// Rebuilds the unique segment with this quadruple, left to right.
    ///
    /// Singletons split into a leading group and a trailing group (odd then
    /// even for upper, even then odd for lower) whose sizes are forced by
    /// `(ω, ε)` minus one odd and one even per pair; each part then follows
    /// from its predecessor by the gap rules.
    pub fn decode(&self, orientation: Orientation) -> Result<Partition> {
        let invalid = || Error::InvalidQuadruple {
            quadruple: self.to_string(),
            orientation: orientation.name(),
        };
        let letters = &self.word.0;
        let pairs = self.word.pair_letters() as u32 / 2;
        let singletons = self.word.singletons() as u32;
        let (Some(odd_single), Some(even_single)) =
            (self.odd.checked_sub(pairs), self.even.checked_sub(pairs))
        else {
            return Err(invalid());
        };
        if odd_single + even_single != singletons || odd_single == 0 || even_single == 0 {
            return Err(invalid());
        }
        let leading = match orientation {
            Orientation::Upper => odd_single,
            Orientation::Lower => even_single,
        };

        // Roles in upper terms: leading singletons act as odd ones.
        let mut factors: Vec<Factor> = Vec::new();
        let mut seen_singletons = 0;
        let mut i = 0;
        let mut cursor: Option<(bool, u32)> = None; // (previous was pair, last part)
        let mut prev_leading = false;
        while i < letters.len() {
            match letters[i] {
                SLetter::S => {
                    let is_leading = seen_singletons < leading;
                    seen_singletons += 1;
                    let part = match cursor {
                        None => self.smallest,
                        Some((prev_pair, last)) => {
                            let gap = match (prev_pair, prev_leading, is_leading) {
                                (true, _, true) => 3,
                                (true, _, false) => 4,
                                (false, true, true) | (false, false, false) => 4,
                                (false, true, false) => 5,
                                (false, false, true) => return Err(invalid()),
                            };
                            last + gap
                        }
                    };
                    factors.push(Factor::singleton(part));
                    cursor = Some((false, part));
                    prev_leading = is_leading;
                    i += 1;
                }
                SLetter::P => {
                    if letters.get(i + 1) != Some(&SLetter::P) {
                        return Err(invalid());
                    }
                    let low = match cursor {
                        None => return Err(invalid()),
                        Some((true, last)) => last + 3,
                        Some((false, last)) => last + if prev_leading { 4 } else { 3 },
                    };
                    factors.push(Factor::pair(low));
                    cursor = Some((true, low + 3));
                    i += 2;
                }
            }
        }
        let parts: Vec<u32> = factors.iter().flat_map(Factor::parts).collect();
        let segment = Partition::new(parts).map_err(|_| invalid())?;
        // The arithmetic above fixes the shape; parity, residues and pairing
        // still have to come out right.
        if !is_minimal_segment_gap_rules(&segment, orientation)
            || !segment_factors_follow_gap_rules(
                &generic_factors(segment.parts(), orientation),
                orientation,
            )
            || Quadruple::encode(&segment, orientation).as_ref() != Ok(self)
        {
            return Err(invalid());
        }
        Ok(segment)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(word: &str, odd: u32, even: u32, smallest: u32) -> Quadruple {
        Quadruple {
            word: word.parse().unwrap(),
            odd,
            even,
            smallest,
        }
    }

    #[test]
    fn codeword_examples() {
        let c = codeword(&p("5+10+14"), Orientation::Upper).unwrap();
        assert_eq!(c.to_string(), "OE^2");
        assert_eq!(c.s_word().to_string(), "S^3");
        let c = codeword(&p("7+11+14+18"), Orientation::Upper).unwrap();
        assert_eq!(c.to_string(), "OP^2E");
        assert_eq!(c.s_word().to_string(), "SP^2S");
        let c = codeword(&p("20+24+28+31+34+37+40+44+49+53"), Orientation::Lower).unwrap();
        assert_eq!(c.to_string(), "E^2P^4E^2O^2");
        let c = codeword(&p("23+27+31+34+37+40+44+48+52+56"), Orientation::Upper).unwrap();
        assert_eq!(c.to_string(), "O^2P^4E^4");
        assert!(codeword(&p("3+8"), Orientation::Upper).is_err());
    }

    #[test]
    fn encode_examples() {
        assert_eq!(
            Quadruple::encode(&p("5+10+14"), Orientation::Upper).unwrap(),
            q("S^3", 1, 2, 5)
        );
    }

    #[test]
    fn decode_examples() {
        assert_eq!(
            q("S^3", 1, 2, 2).decode(Orientation::Lower).unwrap(),
            p("2+6+11")
        );
        assert_eq!(
            q("S^2P^4S^4", 4, 6, 23).decode(Orientation::Upper).unwrap(),
            p("23+27+31+34+37+40+44+48+52+56")
        );
        assert_eq!(
            q("SP2S", 2, 2, 7).decode(Orientation::Upper).unwrap(),
            p("7+11+14+18")
        );
    }

    #[test]
    fn decode_rejects_infeasible() {
        // odd-length P run
        assert!(q("SPS", 2, 1, 7).decode(Orientation::Upper).is_err());
        // no even singleton
        assert!(q("S^2", 2, 0, 5).decode(Orientation::Upper).is_err());
        // smallest part must be odd and above 3
        assert!(q("S^2", 1, 1, 3).decode(Orientation::Upper).is_err());
        assert!(q("S^2", 1, 1, 6).decode(Orientation::Upper).is_err());
        // first pair 4 above 5 would be 9, 12: multiples of 3
        assert!(q("SP^2S", 2, 2, 5).decode(Orientation::Upper).is_err());
        assert!(q("PPS", 1, 2, 5).decode(Orientation::Upper).is_err());
    }

    #[test]
    fn sword_parsing() {
        let w: SWord = "S^2P^4S^4".parse().unwrap();
        assert_eq!(w.0.len(), 10);
        assert_eq!(w.to_string(), "S^2P^4S^4");
        assert_eq!("SSPPS".parse::<SWord>().unwrap().to_string(), "S^2P^2S");
        assert!("SXP".parse::<SWord>().is_err());
    }
}
