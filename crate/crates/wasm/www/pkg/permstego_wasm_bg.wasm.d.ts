/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const capacity_bits: (a: number) => number;
export const decode_cover: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number, number];
export const decode_text: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const encode_cover: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number, number];
export const encode_text: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const generate_key: (a: number, b: bigint) => [number, number];
export const message_value: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const position_entropy: (a: number, b: number, c: bigint) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
