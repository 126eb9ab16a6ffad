# Scroll toolkit package
