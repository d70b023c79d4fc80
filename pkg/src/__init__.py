# lucasdiv - Lucas sequence divisibility toolkit
