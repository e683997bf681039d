#!/usr/bin/env python3
#
# Copyright 2026 The roleaug Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""Generates the bundled two-class mini corpus and its word vectors.

Topic words come in synonym clusters. Training documents only use the first
two members of each cluster while test documents use all four, and a handful
of semantically neutral words co-occur with one class in training but are
spread evenly at test time. Vectors place cluster members close together and
near their class label word.

    python3 tools/make_minicorpus.py data/mini
"""

import json
import math
import random
import sys
from pathlib import Path

DIM = 32
SEED = 20240601

CLUSTERS = {
    "sports": [
        ["game", "match", "contest", "fixture"],
        ["team", "squad", "side", "club"],
        ["coach", "manager", "trainer", "mentor"],
        ["player", "athlete", "competitor", "sportsman"],
        ["goal", "score", "point", "tally"],
        ["ball", "puck", "shuttlecock", "sphere"],
        ["stadium", "arena", "ground", "venue"],
        ["league", "division", "conference", "championship"],
        ["season", "campaign", "calendar", "schedule"],
        ["win", "victory", "triumph", "success"],
        ["referee", "umpire", "official", "judge"],
        ["tournament", "cup", "playoff", "final"],
    ],
    "technology": [
        ["computer", "pc", "laptop", "workstation"],
        ["software", "program", "application", "app"],
        ["chip", "processor", "cpu", "microchip"],
        ["circuit", "board", "wiring", "motherboard"],
        ["network", "internet", "web", "online"],
        ["data", "information", "dataset", "records"],
        ["code", "script", "source", "algorithm"],
        ["device", "gadget", "hardware", "machine"],
        ["memory", "ram", "storage", "disk"],
        ["server", "cloud", "datacenter", "cluster"],
        ["engineer", "developer", "programmer", "coder"],
        ["battery", "charger", "power", "voltage"],
    ],
}

FUNCTION_WORDS = (
    "the a an of to in on for with at by from and or but so as is was were "
    "be been has had have it this that these those there their they we our "
    "he she his her its after before during about into over under very more "
    "most some any all just also then than when while"
).split()

NEUTRAL_WORDS = (
    "monday tuesday friday morning evening week year people city report "
    "oliver caruth sufficient immediate signature firing mister today "
    "yesterday local national new old big small good bad early late first "
    "last next many few several said told asked made took gave went came "
    "saw knew thought"
).split()

# Neutral words that co-occur with one class in training only.
SPURIOUS = {
    "sports": ["oliver", "sufficient", "signature", "monday"],
    "technology": ["caruth", "immediate", "firing", "friday"],
}


def unit(rng):
    v = [rng.gauss(0.0, 1.0) for _ in range(DIM)]
    n = math.sqrt(sum(x * x for x in v))
    return [x / n for x in v]


def add(*terms):
    out = [0.0] * DIM
    for scale, vec in terms:
        for i, x in enumerate(vec):
            out[i] += scale * x
    return out


def make_vectors(rng):
    vectors = {}
    for label, clusters in CLUSTERS.items():
        centroid = unit(rng)
        vectors[label] = add((1.0, centroid), (0.1, unit(rng)))
        for cluster in clusters:
            center = add((0.7, centroid), (0.7, unit(rng)))
            for word in cluster:
                vectors[word] = add((1.0, center), (0.25, unit(rng)))
    for word in FUNCTION_WORDS + NEUTRAL_WORDS:
        vectors.setdefault(word, unit(rng))
    return vectors


def sentence(rng, words):
    words = list(words)
    words[0] = words[0].capitalize()
    text = ""
    for i, w in enumerate(words):
        if i > 0:
            text += " "
        text += w
        if i < len(words) - 1 and rng.random() < 0.08:
            text += ","
    return text + rng.choice([".", ".", ".", "!"])


def document(rng, label, train):
    other = "technology" if label == "sports" else "sports"
    length = rng.randint(10, 16)
    topic = rng.randint(2, 4)
    words = []
    for _ in range(topic):
        cluster = rng.choice(CLUSTERS[label])
        words.append(rng.choice(cluster[:2] if train else cluster))
    if rng.random() < 0.5:
        cluster = rng.choice(CLUSTERS[other])
        words.append(rng.choice(cluster[:2] if train else cluster))
    if train:
        words.extend(rng.sample(SPURIOUS[label], rng.randint(1, 2)))
    else:
        words.extend(rng.sample(SPURIOUS[rng.choice(list(SPURIOUS))], rng.randint(0, 2)))
    while len(words) < length:
        pool = FUNCTION_WORDS if rng.random() < 0.65 else NEUTRAL_WORDS
        words.append(rng.choice(pool))
    rng.shuffle(words)
    return sentence(rng, words)


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for text, label in rows:
            f.write(json.dumps({"text": text, "label": label}) + "\n")


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "data/mini")
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)
    vectors = make_vectors(rng)
    labels = list(CLUSTERS)
    train = [(document(rng, l, True), l) for l in labels for _ in range(25)]
    test = [(document(rng, l, False), l) for l in labels for _ in range(100)]
    rng.shuffle(train)
    rng.shuffle(test)
    write_jsonl(out / "train.jsonl", train)
    write_jsonl(out / "test.jsonl", test)
    with open(out / "vectors.txt", "w", encoding="utf-8", newline="\n") as f:
        f.write(f"{len(vectors)} {DIM}\n")
        for word in sorted(vectors):
            f.write(word + " " + " ".join(f"{x:.5f}" for x in vectors[word]) + "\n")


if __name__ == "__main__":
    main()
