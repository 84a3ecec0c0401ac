"""Root certificates: exact, portable, and independently checkable.

A positive answer "Q(sqrt(delta)) is a subfield of L" ships as the integer
coefficient vector of y(theta) = f'(theta) * sqrt(delta), which must
satisfy y^2 = delta * f'(theta)^2 exactly in Z[X]/(f).  Checking that
identity needs nothing but integer polynomial arithmetic, so a report can
be re-audited long after the scan ran.

Run with: python3 demos/certificates_and_verification.py
"""

import json

from subfieldscan import NumberField, Poly, quad_subfield_scan, verify_certificate
from subfieldscan.cli import report_from_dict, report_json
from subfieldscan.nfroot import RootCertificate


def main():
    f = Poly.from_desc([1, 0, -10, 0, 1])   # minimal polynomial of sqrt2 + sqrt3
    report = quad_subfield_scan(f)
    field = NumberField(report.poly)

    print("scan of x^4 - 10x^2 + 1 found:", sorted(e.delta for e in report.subfields))
    entry = next(e for e in report.subfields if e.delta == 2)
    print(f"certificate for delta = 2: scaled root {list(entry.certificate.scaled_root)}")
    print("verifies:", verify_certificate(field, Poly([-2, 0, 1]), entry.certificate))

    bad = list(entry.certificate.scaled_root)
    bad[0] += 1
    forged = RootCertificate(tuple(bad), entry.certificate.h)
    print("forged copy verifies:", verify_certificate(field, Poly([-2, 0, 1]), forged))

    blob = report_json(report)
    print(f"\nreport serializes to {len(blob)} bytes of JSON; round-trip equal:",
          report_from_dict(json.loads(blob)) == report)
    print("(the CLI `certify` subcommand replays exactly this check)")


if __name__ == "__main__":
    main()
