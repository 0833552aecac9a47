"""Assembly of machine-readable analysis records.

A record collects everything the library computes for one canonical label:
central charge, conformal weight, partner exponents, level, irreducibility,
minimal weight data (dimension at most 3), the congruence verdict and the
space comparison.  All rationals serialize as exact "a/b" strings, never
floats, so records round-trip losslessly through JSON.

Canonical labels with even n are genuine modules but carry no self-coupled
intertwining action; their records keep only the bookkeeping fields and set
"acting" to false.
"""

import csv
import io
import json

from .congruence import congruence_verdict, level
from .core import canonical_label, central_charge, conformal_weight, validate_model
from .errors import SubsetBlowup
from .repdata import (IRREDUCIBLE, irreducibility_certificate,
                      minimal_weight_profile, rep_profile)
from .spaces import space_comparison

NOT_COMPUTED = "not-computed"

#: flat column order for CSV output; list-valued fields are ";"-joined
CSV_COLUMNS = [
    "p", "q", "m", "n", "acting", "c", "h", "s", "level", "irreducibility",
    "k0", "verdict_status", "verdict_criterion", "spaces_status",
    "ratio_check", "lambda", "r", "alpha",
]


def frac_str(x):
    """Exact "a/b" rendering of a rational (always with a denominator)."""
    return "%s/%s" % (x.numerator, x.denominator)


def analyze(p, q, m, n):
    """Full analysis record for the canonical label of (m, n) in V(p, q).

    Raises the usual validation errors on bad input; an in-range label
    that is not acting yields a reduced record with acting = false.
    """
    model = validate_model(p, q)
    label = canonical_label(model, m, n)
    record = {
        "p": model.p,
        "q": model.q,
        "m": label.m,
        "n": label.n,
        "acting": label.is_acting,
        "c": frac_str(central_charge(model)),
        "h": frac_str(conformal_weight(model, label.m, label.n)),
    }
    if not label.is_acting:
        return record

    profile = rep_profile(model, label)
    lv = level(profile)
    try:
        cert = irreducibility_certificate(profile)
    except SubsetBlowup:
        cert = NOT_COMPUTED

    record["s"] = profile.s
    record["partners"] = [
        {"m": mj, "n": nj, "h": frac_str(hj)}
        for (mj, nj), hj in zip(profile.partners, profile.h_partner)
    ]
    record["lambda"] = [frac_str(l) for l in profile.lam]
    record["r"] = [frac_str(rj) for rj in profile.r]
    record["level"] = lv.N
    record["level_factorization"] = [list(ft) for ft in lv.factorization]
    record["irreducibility"] = cert

    if profile.s <= 3 and cert == IRREDUCIBLE:
        mw = minimal_weight_profile(profile, cert)
        record["k0"] = frac_str(mw.k0)
        record["alpha"] = [frac_str(a) for a in mw.alpha]
    else:
        record["k0"] = None
        record["alpha"] = None

    verdict = congruence_verdict(model, label, profile)
    record["verdict"] = {
        "status": verdict.status,
        "criterion": verdict.criterion,
        "details": verdict.details,
    }
    cmp_cert = cert if cert != NOT_COMPUTED else "inconclusive"
    spaces = space_comparison(profile, cmp_cert)
    record["spaces"] = {
        "status": spaces.status,
        "lambda_flags": list(spaces.lambda_flags),
        "ratio_check": spaces.ratio_check,
    }
    return record


def record_to_json(record):
    return json.dumps(record, separators=(", ", ": "))


def record_to_table(record):
    """Human-oriented key/value rendering of one record."""
    lines = []
    for key, value in record.items():
        if isinstance(value, dict):
            lines.append("%-16s" % (key + ":"))
            for sub, sval in value.items():
                lines.append("  %-14s %s" % (sub + ":", _plain(sval)))
        else:
            lines.append("%-16s %s" % (key + ":", _plain(value)))
    return "\n".join(lines)


def _plain(value):
    if isinstance(value, list):
        return "[" + ", ".join(_plain(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join("%s: %s" % (k, _plain(v)) for k, v in value.items()) + "}"
    if value is None:
        return "-"
    return str(value)


def record_to_csv_row(record):
    row = {}
    for col in CSV_COLUMNS:
        if col == "verdict_status":
            v = record.get("verdict")
            row[col] = v["status"] if v else ""
        elif col == "verdict_criterion":
            v = record.get("verdict")
            row[col] = v["criterion"] if v else ""
        elif col == "spaces_status":
            sp = record.get("spaces")
            row[col] = sp["status"] if sp else ""
        elif col == "ratio_check":
            sp = record.get("spaces")
            val = sp["ratio_check"] if sp else None
            row[col] = "" if val is None else str(val).lower()
        elif col in ("lambda", "r", "alpha"):
            val = record.get(col)
            row[col] = ";".join(val) if val else ""
        else:
            val = record.get(col, "")
            if isinstance(val, bool):
                val = str(val).lower()
            row[col] = "" if val is None else val
    return row


def records_to_csv(records):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow(record_to_csv_row(record))
    return buf.getvalue()
