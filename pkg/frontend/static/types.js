// Wire types of the recognition service.
export {};
//# sourceMappingURL=types.js.map