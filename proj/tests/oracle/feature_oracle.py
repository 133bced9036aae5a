#!/usr/bin/env python3
# Copyright 2026 The Stylopsy Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent recount of all 29 features for the golden fixture texts.

This is a separate, regex-based implementation of the feature rules. It shares
nothing with the C++ code except the lexicon data files. Its output is frozen
into tests/fixtures/golden_features.json, which the C++ suites compare against.

    feature_oracle.py --lexicons data/lexicons --texts tests/fixtures/texts \
        --out tests/fixtures/golden_features.json
    feature_oracle.py ... --check     # exit 1 if the committed file is stale
"""

import argparse
import collections
import json
import math
import pathlib
import re
import sys

LETTER = r"[^\W\d_]"
WORD_RE = re.compile(rf"{LETTER}+(?:['-]{LETTER}+)*")
TERMINATOR_RUN = re.compile(r"[.!?]+")
VOWEL_GROUP = re.compile(r"[aeiouy]+")
NUMERIC_DATE = re.compile(rf"(?<!{LETTER})(?<![0-9])([0-9]{{1,2}})([/-])([0-9]{{1,2}})\2([0-9]{{2,4}})(?![0-9])(?!{LETTER})")
FOUR_DIGITS = re.compile(r"(?<![0-9])[0-9]{4}(?![0-9])")
QUESTION_WORDS = {"who", "what", "when", "where", "why", "how", "which", "whose", "whom"}

FEATURES = [
    "word_count", "unique_word_count", "char_count", "avg_word_length", "ttr",
    "hapax_legomenon_rate", "sentence_count", "avg_sentence_length",
    "punctuation_count", "stop_word_count", "complex_sentence_count",
    "question_count", "exclamation_count", "contraction_count",
    "abstract_noun_count", "complex_verb_count", "sophisticated_adjective_count",
    "emotion_word_count", "polarity", "subjectivity", "vader_compound",
    "flesch_reading_ease", "gunning_fog", "first_person_count",
    "direct_address_count", "person_entities", "date_entities",
    "unique_ngram_count", "syntax_variety",
]
RATIOS = {"avg_word_length", "ttr", "hapax_legomenon_rate", "avg_sentence_length",
          "polarity", "subjectivity", "vader_compound", "flesch_reading_ease",
          "gunning_fog", "syntax_variety"}


def read_list(path):
    out = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def load_lexicons(d, common_limit=3000):
    d = pathlib.Path(d)
    sentiment = {}
    for line in read_list(d / "sentiment.tsv"):
        w, p, s = line.split("\t")
        sentiment[w] = (float(p), float(s))
    return {
        "stopwords": set(read_list(d / "stopwords.txt")),
        "contractions": set(read_list(d / "contractions.txt")),
        "emotion": set(read_list(d / "emotion_words.txt")),
        "sentiment": sentiment,
        "first": set(read_list(d / "first_person.txt")),
        "second": set(read_list(d / "second_person.txt")),
        "clause": set(read_list(d / "clause_markers.txt")),
        "months": set(read_list(d / "months.txt")),
        "common": set(read_list(d / "common_words.txt")[:common_limit]),
        "abstract": read_list(d / "abstract_suffixes.txt"),
        "adjective": read_list(d / "adjective_suffixes.txt"),
        "verb": read_list(d / "verb_suffixes.txt"),
    }


def scan(raw):
    """Returns (words as match objects on the normalized text, punct chars with positions)."""
    text = raw.replace("’", "'")
    words = list(WORD_RE.finditer(text))
    covered = set()
    for m in words:
        covered.update(range(m.start(), m.end()))
    punct = [(i, ch) for i, ch in enumerate(text)
             if i not in covered and not ch.isspace() and not re.match(r"\d", ch)]
    return text, words, punct


def sentences_of(text, words):
    """List of (start_word_index, end_word_index_exclusive, terminator)."""
    out = []
    start = 0
    for run in TERMINATOR_RUN.finditer(text):
        end = sum(1 for m in words if m.start() < run.start())
        if end > start:
            out.append((start, end, run.group()[0]))
            start = end
    if start < len(words):
        out.append((start, len(words), None))
    return out


def syllables(token):
    t = token.lower()
    n = len(VOWEL_GROUP.findall(t))
    if n > 1 and len(t) >= 2 and t.endswith("e") and t[-2] not in "aeiouy":
        consonant_le = t.endswith("le") and len(t) >= 3 and t[-3] not in "aeiouy"
        if not consonant_le:
            n -= 1
    return max(n, 1)


def ends_with_any(word, suffixes):
    return any(len(word) > len(s) and word.endswith(s) for s in suffixes)


def date_count(text, words, lex):
    months = sum(1 for m in words if m.group().lower() in lex["months"] and m.group()[0].isupper())
    spans = [m.span() for m in NUMERIC_DATE.finditer(text)]
    years = 0
    for m in FOUR_DIGITS.finditer(text):
        if any(a <= m.start() < b for a, b in spans):
            continue
        if not 1000 <= int(m.group()) <= 2999:
            continue
        s, e = m.start(), m.end()
        if (s > 0 and text[s - 1].isalpha()) or (e < len(text) and text[e].isalpha()):
            continue
        if s >= 2 and text[s - 1] in ".,:/-" and text[s - 2].isdigit():
            continue
        if e + 1 < len(text) and text[e] in ".,:/-" and text[e + 1].isdigit():
            continue
        years += 1
    return months + len(spans) + years


def signature(tokens, terminator, lex):
    n = len(tokens)
    bucket = 0 if n <= 5 else 1 if n <= 10 else 2 if n <= 20 else 3
    first = tokens[0].lower()
    if first in lex["first"]:
        opener = "first"
    elif first in lex["second"]:
        opener = "second"
    elif first in QUESTION_WORDS:
        opener = "question"
    elif first in lex["stopwords"]:
        opener = "stop"
    else:
        opener = "other"
    return (bucket, opener, terminator)


def features(raw, lex):
    text, matches, punct = scan(raw)
    tokens = [m.group() for m in matches]
    lower = [t.lower() for t in tokens]
    sents = sentences_of(text, matches)
    W = len(tokens)
    f = dict.fromkeys(FEATURES, 0)

    counts = collections.Counter(lower)
    f["word_count"] = W
    f["unique_word_count"] = len(counts)
    f["char_count"] = len(raw)
    if W:
        f["avg_word_length"] = sum(len(t) for t in tokens) / W
        f["ttr"] = len(counts) / W
        f["hapax_legomenon_rate"] = sum(1 for c in counts.values() if c == 1) / W

    f["sentence_count"] = len(sents)
    f["avg_sentence_length"] = W / len(sents) if sents else 0
    f["punctuation_count"] = len(punct)
    f["stop_word_count"] = sum(w in lex["stopwords"] for w in lower)
    for a, b, term in sents:
        f["question_count"] += term == "?"
        f["exclamation_count"] += term == "!"
        complex_ = any(w in lex["clause"] for w in lower[a:b])
        for i in range(a + 1, b - 1):
            gap = text[matches[i - 1].end():matches[i].start()]
            if lower[i] in ("and", "but", "or") and "," in gap:
                complex_ = True
        f["complex_sentence_count"] += complex_
    f["contraction_count"] = sum(("'" in w and w in lex["contractions"]) or w.endswith("n't") for w in lower)
    f["abstract_noun_count"] = sum(ends_with_any(w, lex["abstract"]) for w in lower)
    f["complex_verb_count"] = sum(ends_with_any(w, lex["verb"]) and w not in lex["common"] for w in lower)
    f["sophisticated_adjective_count"] = sum(ends_with_any(w, lex["adjective"]) and len(w) >= 7 for w in lower)

    f["emotion_word_count"] = sum(w in lex["emotion"] for w in lower)
    hits = [lex["sentiment"][w] for w in lower if w in lex["sentiment"]]
    if hits:
        s = 0.0
        for p, _ in hits:
            s += p
        subj = 0.0
        for _, q in hits:
            subj += q
        f["polarity"] = s / len(hits)
        f["subjectivity"] = subj / len(hits)
        f["vader_compound"] = s / math.sqrt(s * s + 15.0)

    if W:
        S = max(len(sents), 1)
        syl = [syllables(t) for t in tokens]
        Y = sum(syl)
        C = sum(1 for y in syl if y >= 3)
        f["flesch_reading_ease"] = 206.835 - 1.015 * (W / S) - 84.6 * (Y / W)
        f["gunning_fog"] = 0.4 * ((W / S) + 100.0 * (C / W))

    f["first_person_count"] = sum(w in lex["first"] for w in lower)
    f["direct_address_count"] = sum(w in lex["second"] for w in lower)
    for a, b, _ in sents:
        for t in tokens[a + 1:b]:
            if t[0].isupper() and any(c.islower() for c in t) and t.lower() not in lex["common"]:
                f["person_entities"] += 1
    f["date_entities"] = date_count(text, matches, lex)

    for n in (2, 3):
        grams = collections.Counter(tuple(lower[i:i + n]) for i in range(len(lower) - n + 1))
        f["unique_ngram_count"] += sum(1 for c in grams.values() if c == 1)
    if sents:
        sigs = {signature(tokens[a:b], term, lex) for a, b, term in sents}
        f["syntax_variety"] = len(sigs) / len(sents)
    return f


def self_check(lex):
    """Worked examples, asserted against this oracle before anything is frozen."""
    assert [m.group() for m in scan("Hello, world!")[1]] == ["Hello", "world"]
    assert [p for _, p in scan("Hello, world!")[2]] == [",", "!"]
    t, w, p = scan("don't stop-gap \u2014now")
    assert [m.group() for m in w] == ["don't", "stop-gap", "now"] and [c for _, c in p] == ["\u2014"]
    assert [s[2] for s in sentences_of(*scan("Wait... what?")[:2])] == [".", "?"]
    assert (syllables("cat"), syllables("table"), syllables("queue")) == (1, 2, 1)

    f = features("the cat sat on the mat", lex)
    assert (f["word_count"], f["unique_word_count"], f["char_count"]) == (6, 5, 22)
    assert f["avg_word_length"] == 17 / 6 and f["ttr"] == 5 / 6 and f["hapax_legomenon_rate"] == 4 / 6
    assert abs(f["flesch_reading_ease"] - 116.145) < 1e-9 and abs(f["gunning_fog"] - 2.4) < 1e-9
    f = features("aaa aaa aaa", lex)
    assert f["ttr"] == 1 / 3 and f["hapax_legomenon_rate"] == 0
    f = features("Don't stop! Why not?", lex)
    assert (f["sentence_count"], f["question_count"], f["exclamation_count"],
            f["contraction_count"], f["punctuation_count"]) == (2, 1, 1, 1, 2)
    assert features("I left because it rained.", lex)["complex_sentence_count"] == 1
    f = features("I told you my plan.", lex)
    assert (f["first_person_count"], f["direct_address_count"]) == (2, 1)
    assert features("Yesterday Alice met Bob.", lex)["person_entities"] == 2
    assert features("In March 2021 it rained.", lex)["date_entities"] == 2
    assert features("a b a b", lex)["unique_ngram_count"] == 3
    assert features("Hi there. Hi there.", lex)["syntax_variety"] == 0.5
    assert all(v == 0 for v in features("", lex).values())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--lexicons", required=True)
    ap.add_argument("--texts", required=True)
    ap.add_argument("--out", required=True)
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()

    lex = load_lexicons(args.lexicons)
    self_check(lex)
    golden = {}
    for path in sorted(pathlib.Path(args.texts).glob("*.txt")):
        raw = path.read_bytes().decode("utf-8")
        f = features(raw, lex)
        golden[path.stem] = {k: (float(f[k]) if k in RATIOS else int(f[k])) for k in FEATURES}
    body = json.dumps(golden, indent=1, sort_keys=False) + "\n"

    out = pathlib.Path(args.out)
    if args.check:
        if not out.exists() or out.read_text(encoding="utf-8") != body:
            print(f"{out} is stale; rerun without --check", file=sys.stderr)
            return 1
        print(f"{out} matches the oracle ({len(golden)} texts)")
        return 0
    out.write_text(body, encoding="utf-8")
    print(f"wrote {len(golden)} golden vectors to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
