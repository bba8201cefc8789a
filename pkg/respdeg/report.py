"""Per-coalition responsibility reports."""
import csv
import io
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from respdeg import bitset, config
from respdeg.cgs import Coalition
from respdeg.degrees import sdr, fdr
from respdeg.exceptions import ReportTooLarge
from respdeg.parser import model_digest
from respdeg.responsibility import PreclusionSemantics, responsible_coalitions, minimal_responsible_coalitions
from respdeg.util import degree_view, distance_view

logger = logging.getLogger(__name__)

CSV_HEADER = ['coalition', 'responsible', 'sdr', 'fdr', 'distance']


@dataclass(frozen=True)
class ReportRow:
    coalition: Coalition
    responsible: bool
    sdr: object
    fdr: object


@dataclass(frozen=True)
class ResponsibilityReport:
    model: object
    model_id: str
    content_hash: str
    state: int
    affairs: object
    semantics: PreclusionSemantics
    rows: tuple
    minimal: tuple
    timings: dict = None


def build_report(model, state, affairs, semantics=PreclusionSemantics.FUTURE, model_id='',
                 threads=1, include_empty=False, timings=False, force=None, max_agents=None):
    """Verdicts and degrees of every non-empty coalition (and of the empty one on request).

    Rows are ordered by (cardinality, bitset value) whatever the number of threads.
    """
    semantics = PreclusionSemantics(semantics)
    if force is None:
        force = config.FORCE
    if max_agents is None:
        max_agents = config.MAX_AGENTS
    if model.num_agents > max_agents and not force:
        raise ReportTooLarge(model.num_agents, max_agents)

    started = time.perf_counter()
    responsible = responsible_coalitions(model, state, affairs, semantics, threads=threads)
    minimal = minimal_responsible_coalitions(responsible)
    checked = time.perf_counter()

    def row(mask):
        coalition = Coalition(mask)
        return ReportRow(coalition, coalition in responsible,
                         sdr(model, state, affairs, coalition, semantics, responsible=responsible),
                         fdr(model, state, affairs, coalition, semantics))

    masks = bitset.subsets_by_cardinality(model.num_agents, include_empty=include_empty)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            rows = tuple(executor.map(row, masks))
    else:
        rows = tuple(map(row, masks))
    finished = time.perf_counter()
    logger.debug('Report over {} coalition(s) computed in {:.3f}s.'.format(len(rows), finished - started))

    elapsed = None
    if timings:
        elapsed = {'responsible': checked - started, 'degrees': finished - checked, 'total': finished - started}
    return ResponsibilityReport(model, model_id, model_digest(model), state, affairs,
                                semantics, rows, minimal, elapsed)


def sequence_view(model, sequence):
    if sequence is None:
        return None
    return {
        'states': [model.states[q] for q in sequence.states],
        'profiles': [dict(zip(model.agents, model.profile_names(p))) for p in sequence.profiles],
    }


def report_view(report, precision=None):
    model = report.model
    rows = []
    for row in report.rows:
        rows.append({
            'coalition': model.describe_coalition(row.coalition),
            'weakly_responsible': row.responsible,
            'sdr': degree_view(row.sdr.value, precision),
            'sdr_witness': model.describe_coalition(row.sdr.witness) if row.sdr.defined else None,
            'fdr': degree_view(row.fdr.value, precision),
            'distance': distance_view(row.fdr.distance),
            'fdr_witness': sequence_view(model, row.fdr.witness),
        })
    view = {
        'model': {'id': report.model_id, 'sha256': report.content_hash},
        'state': model.states[report.state],
        'affairs': model.state_names(report.affairs),
        'semantics': report.semantics.value,
        'minimal_responsible': [model.describe_coalition(c) for c in report.minimal],
        'rows': rows,
    }
    if report.timings is not None:
        view['timings'] = {key: '{:.6f}'.format(value) for key, value in report.timings.items()}
    return view


def report_csv(view):
    output = io.StringIO()
    writer = csv.writer(output, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for row in view['rows']:
        writer.writerow([
            row['coalition'],
            'true' if row['weakly_responsible'] else 'false',
            row['sdr'] if isinstance(row['sdr'], str) else row['sdr']['fraction'],
            row['fdr']['fraction'],
            row['distance'],
        ])
    return output.getvalue()

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
