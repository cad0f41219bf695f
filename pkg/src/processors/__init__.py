# Classification processors package
