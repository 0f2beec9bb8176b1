# anchors sys.path so test modules can import the shared oracles
