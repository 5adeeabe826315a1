summary = f'{count} files processed in {elapsed:.2f} seconds'
