namespace qts {}
