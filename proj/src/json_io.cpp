namespace tamb {}
