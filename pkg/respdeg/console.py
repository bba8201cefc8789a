import os
from prettytable import PrettyTable
from respdeg import clientapi

def get_view(view_name, args):
    if view_name == 'validate':
        return clientapi.call('validate', {'model': args.model})
    params = {'model': args.model, 'state': args.state, 'affairs': args.affairs}
    if view_name in ['sdr', 'fdr', 'oracle']:
        params['coalition'] = args.coalition
    elif view_name == 'responsible':
        params['minimal_only'] = args.minimal_only
    elif view_name == 'report':
        params['include_empty'] = args.include_empty
        params['timings'] = args.timings
    return clientapi.call(view_name, params)

def _render(value):
    if isinstance(value, dict):
        return '{} ({})'.format(value['fraction'], value['decimal'])
    return value

def _query_header(view):
    table = PrettyTable(header=False, align='l')
    table.add_row(['State:', view['state']])
    table.add_row(['Affairs:', '{' + ','.join(view['affairs']) + '}'])
    table.add_row(['Semantics:', view['semantics']])
    return table.get_string()

def print_validate(view):
    lines = []
    lines.append('Model OK')
    table = PrettyTable(header=False, align='l')
    table.add_row(['Model:', view['model']])
    table.add_row(['SHA-256:', view['sha256']])
    table.add_row(['Agents:', view['agents']])
    table.add_row(['States:', view['states']])
    table.add_row(['Actions:', view['actions']])
    table.add_row(['Transitions:', view['transitions']])
    table.add_row(['Affairs:', ', '.join(view['affairs']) or '-'])
    lines.append(table.get_string())
    print(os.linesep.join(lines))

def print_responsible(view):
    lines = []
    lines.append(_query_header(view))
    lines.append('')
    lines.append('Minimal responsible coalitions' if view['minimal_only'] else 'Responsible coalitions')
    if view['coalitions']:
        table = PrettyTable(['Coalition'], align='l')
        for coalition in view['coalitions']:
            table.add_row([coalition])
        lines.append(table.get_string())
    else:
        lines.append('None.')
    print(os.linesep.join(lines))

def print_sdr(view):
    print(view['text'])

def print_fdr(view):
    print(view['text'])

def print_oracle(view):
    lines = []
    lines.append(_query_header(view))
    lines.append('')
    table = PrettyTable(header=False, align='l')
    table.add_row(['Coalition:', view['coalition']])
    table.add_row(['Can preclude:', view['can_preclude']])
    table.add_row(['Distance:', view['distance']])
    lines.append(table.get_string())
    if view['strategy']:
        lines.append('')
        lines.append('Positional strategy')
        for line in view['strategy']:
            lines.append('  ' + line)
    print(os.linesep.join(lines))

def _witness(sequence):
    if sequence is None:
        return ''
    steps = [sequence['states'][0]]
    for profile, state in zip(sequence['profiles'], sequence['states'][1:]):
        steps.append('({}) {}'.format(','.join(profile.values()), state))
    return ' -> '.join(steps)

def print_report(view):
    lines = []
    lines.append('')
    lines.append('Responsibility report')
    table = PrettyTable(header=False, align='l')
    table.add_row(['Model:', view['model']['id']])
    table.add_row(['SHA-256:', view['model']['sha256']])
    table.add_row(['State:', view['state']])
    table.add_row(['Affairs:', '{' + ','.join(view['affairs']) + '}'])
    table.add_row(['Semantics:', view['semantics']])
    table.add_row(['Minimal responsible:', ' '.join(view['minimal_responsible']) or '-'])
    lines.append(table.get_string())
    lines.append('')
    table = PrettyTable(['Coalition', 'Responsible', 'SDR', 'SDR witness', 'FDR', 'Distance', 'FDR witness'])
    table.align = 'l'
    for row in view['rows']:
        table.add_row([row['coalition'], 'yes' if row['weakly_responsible'] else 'no',
                       _render(row['sdr']), row['sdr_witness'] or '', _render(row['fdr']),
                       row['distance'], _witness(row['fdr_witness'])])
    lines.append(table.get_string())
    if 'timings' in view:
        lines.append('')
        for key in sorted(view['timings']):
            lines.append('{}: {}s'.format(key, view['timings'][key]))
    lines.append('')
    print(os.linesep.join(lines))

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
