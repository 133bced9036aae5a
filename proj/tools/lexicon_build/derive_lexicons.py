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
"""Regenerates the derived lexicon files under data/lexicons.

Inputs are the unpacked wheels of textblob (en-sentiment.xml, en-lexicon.txt),
vaderSentiment (vader_lexicon.txt) and wordfreq (large_en.msgpack.gz). The
hand-curated lists (stopwords, pronouns, clause markers, ...) are not touched.

    python3 derive_lexicons.py --textblob DIR --vader DIR --wordfreq DIR --out data/lexicons
"""

import argparse
import collections
import gzip
import pathlib
import re
import xml.etree.ElementTree as ET

WORD = re.compile(r"[a-z]+(['-][a-z]+)*")
EMOTION_THRESHOLD = 2.4      # |mean VADER valence| for emotion_words
VADER_SENTIMENT_THRESHOLD = 1.5
COMMON_WORDS = 3000

MONTHS = ["january", "february", "march", "april", "may", "june", "july",
          "august", "september", "october", "november", "december"]
# lowercase homographs in the Brill lexicon that are still mostly names
EXTRA_PROPER = {"john", "peter", "chris", "harry", "texas"}

WEEKDAYS = ["monday", "tuesday", "wednesday", "thursday", "friday",
            "saturday", "sunday"]


def textblob_sentiment(path):
    per_word = collections.defaultdict(list)
    for w in ET.parse(path).getroot().findall("word"):
        form = w.get("form").lower()
        if WORD.fullmatch(form):
            per_word[form].append((float(w.get("polarity")),
                                   float(w.get("subjectivity"))))
    return {k: (sum(p for p, _ in v) / len(v), sum(s for _, s in v) / len(v))
            for k, v in per_word.items()}


def vader_valences(path):
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            parts = line.rstrip("\n").split("\t")
            if len(parts) >= 2 and WORD.fullmatch(parts[0]):
                out[parts[0]] = float(parts[1])
    return out


def fit_subjectivity(tb):
    # least squares subjectivity ~ a + b*|polarity| over the TextBlob entries
    xs = [abs(p) for p, _ in tb.values()]
    ys = [s for _, s in tb.values()]
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    b = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
    return my - b * mx, b


def proper_nouns(brill_path):
    lower, capital = set(), set()
    with open(brill_path, encoding="utf-8") as fh:
        for line in fh:
            if line.startswith(";;;"):
                continue
            parts = line.split()
            if len(parts) < 2:
                continue
            word = parts[0]
            if word.islower():
                lower.add(word)
            elif word[:1].isupper() and any(t in ("NNP", "NNPS") for t in parts[1:]):
                capital.add(word.lower())
    return (capital - lower) | EXTRA_PROPER


def common_words(wordfreq_path, drop):
    import msgpack
    buckets = msgpack.load(gzip.open(wordfreq_path), raw=False)
    out = []
    for bucket in buckets[1:]:
        for w in bucket:
            if WORD.fullmatch(w) and w not in drop and w not in out:
                out.append(w)
        if len(out) >= COMMON_WORDS:
            break
    # calendar words stay common so they never read as person names
    head = out[:COMMON_WORDS]
    missing = [w for w in MONTHS + WEEKDAYS if w not in head]
    head = [w for w in out if w not in missing][:COMMON_WORDS - len(missing)]
    return head + missing


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--textblob", required=True)
    ap.add_argument("--vader", required=True)
    ap.add_argument("--wordfreq", required=True)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()
    out = pathlib.Path(args.out)

    tb = textblob_sentiment(pathlib.Path(args.textblob) / "en-sentiment.xml")
    vader = vader_valences(pathlib.Path(args.vader) / "vader_lexicon.txt")
    a, b = fit_subjectivity(tb)

    sentiment = dict(tb)
    for word, v in vader.items():
        if word not in sentiment and abs(v) >= VADER_SENTIMENT_THRESHOLD:
            pol = max(-1.0, min(1.0, v / 4.0))
            sentiment[word] = (pol, max(0.0, min(1.0, a + b * abs(pol))))

    with open(out / "sentiment.tsv", "w", encoding="utf-8") as fh:
        fh.write("# word\tpolarity\tsubjectivity\n")
        fh.write("# TextBlob (MIT) adjective lexicon averaged over senses, plus VADER (MIT)\n")
        fh.write(f"# words with |valence| >= {VADER_SENTIMENT_THRESHOLD}: polarity = valence/4,\n")
        fh.write(f"# subjectivity = {a:.4f} + {b:.4f}*|polarity| (fit on the TextBlob entries)\n")
        for word in sorted(sentiment):
            p, s = sentiment[word]
            fh.write(f"{word}\t{p:.3f}\t{s:.3f}\n")

    emotions = sorted(w for w, v in vader.items() if abs(v) >= EMOTION_THRESHOLD)
    with open(out / "emotion_words.txt", "w", encoding="utf-8") as fh:
        fh.write(f"# VADER (MIT) single-word entries with |mean valence| >= {EMOTION_THRESHOLD}\n")
        fh.write("\n".join(emotions) + "\n")

    drop = proper_nouns(pathlib.Path(args.textblob) / "en-lexicon.txt")
    common = common_words(pathlib.Path(args.wordfreq) / "large_en.msgpack.gz", drop)
    with open(out / "common_words.txt", "w", encoding="utf-8") as fh:
        fh.write("# wordfreq (large_en) alphabetic words by descending frequency, proper nouns\n")
        fh.write("# (capitalized-only NNP/NNPS in the Brill lexicon) removed, then month and\n")
        fh.write("# weekday names appended within the first 3000. The loader keeps the first N.\n")
        fh.write("\n".join(common) + "\n")

    print(f"sentiment={len(sentiment)} emotion={len(emotions)} common={len(common)} fit=({a:.4f},{b:.4f})")


if __name__ == "__main__":
    main()
