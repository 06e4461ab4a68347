import json
import os

from tqdm.auto import tqdm

from sigma7.decompose import decompose
from sigma7.exceptions import MalformedInput
from sigma7.invariants import validate
from sigma7.wedge import parse_wedge

default_file = os.path.join(os.path.dirname(__file__), 'golden.json')

class CorpusEntry(object):
    '''A worked case: descriptor, expected wedge text per suspension level and its citation.'''
    def __init__(self, name, descriptor, expected, citation=''):
        self.name = name
        self.descriptor = validate(descriptor)
        if not isinstance(expected, dict) or not all(isinstance(v, str) for v in expected.values()):
            raise MalformedInput(f'{name}: expected must map suspension levels to wedge texts, got {expected!r}')
        self.expected = {int(k):v for k,v in expected.items()}
        for k,text in self.expected.items():
            if k not in (1, 2):
                raise ValueError(f'{name}: suspension level must be 1 or 2, got {k}')
            if parse_wedge(text).render()!=text:
                raise ValueError(f'{name}: expected text {text!r} is not in canonical form')
        self.citation = citation

    def run(self):
        '''List of (suspensions, expected, computed, ok).'''
        out = []
        for k, text in sorted(self.expected.items()):
            got = decompose(self.descriptor, k).render()
            out.append((k, text, got, got==text))
        return out

    def __repr__(self):
        return f'CorpusEntry({self.name})'

_fields = {'name', 'descriptor', 'expected', 'citation'}

def load_corpus(file=None):
    with open(file or default_file) as f:
        data = json.load(f)
    if not isinstance(data, list):
        raise MalformedInput('a corpus file holds a JSON list of entries')
    entries = []
    for item in data:
        if not isinstance(item, dict) or not set(item)<=_fields or not {'name', 'descriptor', 'expected'}<=set(item):
            raise MalformedInput(f'corpus entries need name, descriptor and expected (citation optional), got {item!r}')
        entries.append(CorpusEntry(**item))
    return entries

def run_corpus(entries=None, verbose=0):
    '''Decompose every entry and compare against its expected text.

    Returns
    -------
    list of (entry, suspensions, expected, computed, ok)
    '''
    entries = load_corpus() if entries is None else entries
    results = []
    for entry in (tqdm(entries) if verbose>0 else entries):
        for k, text, got, ok in entry.run():
            results.append((entry, k, text, got, ok))
            if verbose>1 or (verbose>0 and not ok):
                print(f'{entry.name} [{k}]: {"ok" if ok else "MISMATCH"} {got}')
    return results
