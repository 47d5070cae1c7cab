from . import binomial, corpus, identities, records, report, suite
