import json
import logging
import os
from typing import List

import pandas as pd

from lamkernel.models.report import SuiteReport
from lamkernel.schemas.report import lemma_results_schema

logger = logging.getLogger(__name__)

SUPPORTED_EXTENSIONS = ('.json', '.jsonl', '.csv', '.xlsx')


def report_records(report: SuiteReport) -> List[dict]:
    """One record per lemma: name, cases, failures, millis and the kept reproducers."""
    return lemma_results_schema.dump(report.results)


def _flat_frame(report: SuiteReport) -> pd.DataFrame:
    rows = []
    for record in report_records(report):
        reproducers = record.pop('reproducers')
        record['reproducers'] = "\n".join(f"{r['case']}  ({r['detail']})" for r in reproducers)
        rows.append(record)
    columns = ['name', 'passed', 'cases', 'failures', 'millis', 'reproducers']
    return pd.DataFrame(rows, columns=columns)


def write_report(report: SuiteReport, path: str) -> None:
    """Write the machine-readable report, choosing the format from the file extension.

    Args:
        report: Finished suite report
        path: Target file ending in .json, .jsonl, .csv or .xlsx

    Raises:
        ValueError: If the extension is not supported
    """
    extension = os.path.splitext(path)[1].lower()
    if extension not in SUPPORTED_EXTENSIONS:
        raise ValueError(f"Unsupported report format {extension!r}; "
                         f"use one of {', '.join(SUPPORTED_EXTENSIONS)}")
    if extension == '.json':
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(report_records(report), f, ensure_ascii=False, indent=2)
    elif extension == '.jsonl':
        with open(path, 'w', encoding='utf-8') as f:
            for record in report_records(report):
                f.write(json.dumps(record, ensure_ascii=False) + "\n")
    elif extension == '.csv':
        _flat_frame(report).to_csv(path, index=False)
    else:
        _flat_frame(report).to_excel(path, index=False, engine='openpyxl')
    logger.info("Report with %d lemmas written to %s", len(report.results), path)
