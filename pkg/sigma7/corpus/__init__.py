from sigma7.corpus.golden_cases import CorpusEntry, load_corpus, run_corpus, default_file
